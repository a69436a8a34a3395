#include <doctest.h>

#include "parse.hpp"

using namespace igusa;

TEST_CASE("bivariate arithmetic and evaluation") {
    Fq F(5, 1);
    auto x = BivarPoly::monomial(&F, 1, 0, LocalNum::from_fq(&F, 1));
    auto y = BivarPoly::monomial(&F, 0, 1, LocalNum::from_fq(&F, 1));
    auto one = BivarPoly::constant(&F, LocalNum::from_fq(&F, 1));

    auto g = y * y - x * x * x; // y^2 - x^3
    CHECK(g.deg_x() == 3);
    CHECK(g.deg_y() == 2);
    CHECK(g.coeff(3, 0) == LocalNum::from_int(&F, -1));
    CHECK(g.coeff(0, 2) == LocalNum::from_fq(&F, 1));
    CHECK(g.coeff(1, 1).is_zero());

    // (x + y)^5 = x^5 + y^5 in characteristic 5.
    auto fr = (x + y).pow(5);
    CHECK(fr == fr); // self-consistency of map equality
    CHECK(fr.coeff(5, 0) == LocalNum::from_fq(&F, 1));
    CHECK(fr.coeff(0, 5) == LocalNum::from_fq(&F, 1));
    CHECK(fr.terms().size() == 2);

    // Evaluation agrees with direct substitution.
    LocalNum a = LocalNum::from_terms(&F, {{0, 2}, {1, 3}}); // 2 + 3t
    LocalNum b = LocalNum::from_terms(&F, {{-1, 1}});        // t^-1
    LocalNum lhs = g.eval(a, b);
    LocalNum rhs = b * b - a * a * a;
    CHECK(lhs == rhs);

    // Subtraction cancels exactly.
    CHECK((g - g).is_zero());
    CHECK((g * one) == g);
}

TEST_CASE("derivatives follow the characteristic") {
    Fq F(3, 1);
    auto x = BivarPoly::monomial(&F, 1, 0, LocalNum::from_fq(&F, 1));
    auto y = BivarPoly::monomial(&F, 0, 1, LocalNum::from_fq(&F, 1));

    auto p = x.pow(3) + x * x + y; // over F_3: d/dx x^3 = 0
    auto px = p.dx();
    CHECK(px.coeff(2, 0).is_zero());
    CHECK(px.coeff(1, 0) == LocalNum::from_fq(&F, 2));
    CHECK(p.dy() == BivarPoly::constant(&F, LocalNum::from_fq(&F, 1)));

    auto q = y.pow(3);
    CHECK(q.dy().is_zero());
}

TEST_CASE("affine substitution is exact") {
    Fq F(5, 1);
    auto g = parse_bivar("y^2 - x^3", &F);
    LocalNum pi = LocalNum::pi_pow(&F, 1);
    LocalNum c = LocalNum::from_fq(&F, 2);
    // x -> 2 + t*x, y -> t*y
    auto h = g.subst_affine(c, pi, LocalNum::zero(&F), pi);
    // Check at several points against direct evaluation.
    for (unsigned ax = 0; ax < 5; ++ax)
        for (unsigned ay = 0; ay < 5; ++ay) {
            LocalNum X = LocalNum::from_fq(&F, ax);
            LocalNum Y = LocalNum::from_fq(&F, ay, 2); // some nonflat point
            CHECK(h.eval(X, Y) == g.eval(c + pi * X, pi * Y));
        }
}

TEST_CASE("integrality, reduction, and coefficient shifts") {
    Fq F(5, 1);
    auto g = parse_bivar("y^2 - x^3 + t*x^4", &F);
    CHECK(g.is_integral());
    CHECK(g.min_ord() == std::optional<int>(0));

    FqBivar r = g.reduce_mod_pi();
    CHECK(r.c.size() == 2); // the t*x^4 term vanishes mod pi
    CHECK(r.eval(F.from_int(2), F.from_int(0)) == F.from_int(-8));
    // Gradient of the reduction at a nonsingular zero of y^2 - x^3.
    CHECK(!r.dx().is_zero());

    auto shifted = g.coeff_shifted(-1);
    CHECK(!shifted.is_integral());
    CHECK(shifted.min_ord() == std::optional<int>(-1));
    CHECK(shifted.coeff_shifted(1) == g);

    BivarPoly z(&F);
    CHECK(z.is_integral());
    CHECK(!z.min_ord().has_value());
}

TEST_CASE("curve expansion validates integrality") {
    Fq F(5, 1);

    // y^2 = x(x-1)(x-2): plain integral curve.
    FactoredCurve c;
    c.gamma0 = LocalNum::from_fq(&F, 1);
    c.roots = {{LocalNum::zero(&F), 1},
               {LocalNum::from_fq(&F, 1), 1},
               {LocalNum::from_fq(&F, 2), 1}};
    c.m = 2;
    auto g = expand_validate(c);
    CHECK(g.coeff(0, 2) == LocalNum::from_fq(&F, 1));
    CHECK(g.coeff(3, 0) == LocalNum::from_int(&F, -1));
    CHECK(g.coeff(2, 0) == LocalNum::from_fq(&F, 3));   // x(x-1)(x-2) = x^3 - 3x^2 + 2x
    CHECK(g.coeff(1, 0) == LocalNum::from_int(&F, -2));
    CHECK(g.eval(LocalNum::from_fq(&F, 3), LocalNum::zero(&F)) ==
          LocalNum::from_int(&F, -6));

    // Negative-order data can still expand integrally:
    // gamma0 = -t^2, roots (t^-1, 2), (0, 2), m = 2 gives
    // y^2 + x^2 (t x - 1)^2 = y^2 + t^2 x^4 - 2 t x^3 + x^2.
    FactoredCurve d;
    d.gamma0 = -LocalNum::pi_pow(&F, 2);
    d.roots = {{LocalNum::pi_pow(&F, -1), 2}, {LocalNum::zero(&F), 2}};
    d.m = 2;
    auto h = expand_validate(d);
    CHECK(h.is_integral());
    CHECK(h.coeff(4, 0) == LocalNum::pi_pow(&F, 2));
    CHECK(h.coeff(3, 0) == LocalNum::from_int(&F, -2).shifted(1));
    CHECK(h.coeff(2, 0) == LocalNum::from_fq(&F, 1));
    CHECK(h.coeff(0, 2) == LocalNum::from_fq(&F, 1));

    // ord(gamma0) + sum n_i ord(gamma_i) < 0 is reported by name.
    FactoredCurve bad = c;
    bad.gamma0 = LocalNum::pi_pow(&F, -1);
    CHECK_THROWS_WITH_AS(expand_validate(bad),
                         doctest::Contains("cannot be integral"), error);

    // p | m is rejected.
    FactoredCurve pm = c;
    pm.m = 5;
    CHECK_THROWS_AS(expand_validate(pm), error);

    // Repeated roots are rejected.
    FactoredCurve rep = c;
    rep.roots.push_back({LocalNum::from_fq(&F, 1), 2});
    CHECK_THROWS_AS(expand_validate(rep), error);

    // m < 2 is rejected.
    FactoredCurve m1 = c;
    m1.m = 1;
    CHECK_THROWS_AS(expand_validate(m1), error);

    // gamma0 = 0 is rejected.
    FactoredCurve z0 = c;
    z0.gamma0 = LocalNum::zero(&F);
    CHECK_THROWS_AS(expand_validate(z0), error);
}
