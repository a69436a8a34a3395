#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "parse.hpp"
#include "solver.hpp"
#include "spf.hpp"

using namespace igusa;

namespace {

CycloNum one() { return CycloNum::rational(Rat(1)); }

// Runs fn and reports the error class it failed with; errc::invalid has value
// 0, so tests that expect it assert the throw separately.
template <class Fn>
errc kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.kind;
    }
    FAIL("expected an error");
    return errc::internal;
}

// True when every canonical denominator factor of Z, with multiplicity,
// fits inside the given multiset.
bool denominator_divides(const ZetaRat& Z, const std::map<QPow, long>& allowed) {
    for (const auto& [f, mult] : Z.denominator()) {
        auto it = allowed.find(f);
        if (it == allowed.end() || mult > it->second) return false;
    }
    return true;
}

bool raw_within(const ZetaRat& Z, const std::vector<QPow>& allowed) {
    for (const auto& [f, mult] : Z.raw_denominator())
        if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) return false;
    return true;
}

void check_series_agree(const ZetaRat& Z, const BivarPoly& g, const Character& chi,
                        long order) {
    auto closed = Z.series(order);
    auto expanded = series_by_expansion(g, chi, order);
    REQUIRE(closed.size() == expanded.size());
    for (size_t i = 0; i < closed.size(); ++i) CHECK(closed[i] == expanded[i]);
}

// The conductor-2 character on units mod pi^2 that is trivial on the
// Teichmueller digits and sends 1 + pi a to zeta_q^a; only for prime q.
Character wild_char(const Fq* F) {
    long q = F->q();
    std::map<long, long> values;
    for (unsigned u0 = 1; u0 < static_cast<unsigned>(q); ++u0)
        for (unsigned u1 = 0; u1 < static_cast<unsigned>(q); ++u1)
            values[static_cast<long>(u1) * q + u0] =
                static_cast<long>(F->mul(u1, F->inv(u0)));
    return Character::table(F, q, 2, values);
}

} // namespace

TEST_CASE("scalar peel: frozen ladder for pi^3 + y^2") {
    Fq F(5, 1);
    Character chi = Character::trivial(&F);
    ClusterForm st;
    st.b = LocalNum::pi_pow(&F, 3);
    st.ycoef = LocalNum::from_fq(&F, 1);
    st.m = 2;

    PeeledForm pf = peel_scalar_layers(st, chi);
    CHECK(pf.qexp == 2);
    CHECK(pf.texp == 3);
    CHECK(pf.form.b.is_unit());
    CHECK(pf.form.ycoef == LocalNum::pi_pow(&F, 1));
    ZetaRat prefix = ZetaRat::scalar(5, Rat(4, 5)) +
                     ZetaRat::monomial(5, CycloNum::rational(Rat(4, 5)), 1, 2);
    CHECK(pf.prefix.equals(prefix));

    ZetaRat Z = cluster_zeta(st, chi);
    ZetaRat want = prefix + ZetaRat::monomial(5, one(), 2, 3);
    CHECK(Z.equals(want));
    check_series_agree(Z, st.expand(), chi, 8);
}

TEST_CASE("scalar peel: y-led coefficient expands in m-sized bites") {
    Fq F(5, 1);
    Character chi = Character::trivial(&F);
    ClusterForm st;
    st.b = LocalNum::pi_pow(&F, 5);
    st.ycoef = LocalNum::from_fq(&F, 2);
    st.m = 3;

    PeeledForm pf = peel_scalar_layers(st, chi);
    CHECK(pf.qexp == 2);
    CHECK(pf.texp == 5);
    CHECK(pf.form.b.is_unit());
    CHECK(*pf.form.ycoef.ord() == 1);

    check_series_agree(cluster_zeta(st, chi), st.expand(), chi, 9);

    // and with the x-side leading instead, the whole power of pi scales out
    ClusterForm sw;
    sw.b = LocalNum::from_fq(&F, 3);
    sw.ycoef = LocalNum::pi_pow(&F, 2);
    sw.m = 2;
    PeeledForm pf2 = peel_scalar_layers(sw, chi);
    CHECK(pf2.qexp == 0);
    CHECK(pf2.texp == 0);
    CHECK(pf2.prefix.is_zero());
    check_series_agree(cluster_zeta(sw, chi), sw.expand(), chi, 8);
}

TEST_CASE("binomial closed form agrees with point counts and expansion") {
    struct Case {
        long p, d, m;
        long e0;
    };
    const Case cases[] = {{7, 2, 3, 0}, {5, 2, 2, 0}, {5, 3, 2, 1}, {5, 4, 2, 0}, {3, 2, 4, 1}};
    for (const Case& c : cases) {
        CAPTURE(c.p);
        CAPTURE(c.d);
        CAPTURE(c.m);
        Fq F(c.p, 1);
        Character chi = Character::trivial(&F);
        LocalNum mu1 = LocalNum::from_fq(&F, 1);
        LocalNum mu2 = LocalNum::from_fq(&F, 1, static_cast<int>(c.e0));
        ZetaRat Z = binomial_zeta(mu1, c.d, mu2, c.m, chi);

        // mass: |O^2| = 1 at T = 1
        CHECK(Z.eval_at(Rat(1)) == one());

        // denominator bound: only the compact facet and the measure factor
        long g = std::gcd(c.d, c.m);
        QPow facet{c.m / g + c.d / g, c.d / g * c.m};
        CHECK(raw_within(Z, {{1, 1}, facet}));

        BivarPoly h = BivarPoly::monomial(&F, static_cast<int>(c.d), 0, mu1) +
                      BivarPoly::monomial(&F, 0, static_cast<int>(c.m), mu2);
        auto rep = poincare_check(Z, count_profile(h, 3));
        CHECK(rep.pass);
        CAPTURE(rep.detail);
        check_series_agree(Z, h, chi, 6);
    }
}

TEST_CASE("binomial closed form under nontrivial characters") {
    Fq F(5, 1);
    Character quad = Character::mult(&F, 2, 1);
    Character four = Character::mult(&F, 4, 1);
    Character wild = wild_char(&F);
    LocalNum u1 = LocalNum::from_fq(&F, 1);
    LocalNum u2 = LocalNum::from_fq(&F, 2);

    for (const Character* chi : {&quad, &four, &wild}) {
        CAPTURE(chi->describe());
        ZetaRat Z = binomial_zeta(u1, 2, u2, 2, *chi);
        BivarPoly h = parse_bivar("x^2 + 2*y^2", &F);
        check_series_agree(Z, h, *chi, 6);

        ZetaRat Z2 = binomial_zeta(u2, 3, LocalNum::from_fq(&F, 1, 1), 2, *chi);
        BivarPoly h2 = parse_bivar("2*x^3 + t*y^2", &F);
        check_series_agree(Z2, h2, *chi, 6);
    }

    // rational-valued character: the truncation certificate is exact
    ZetaRat Z = binomial_zeta(u1, 2, u2, 2, quad);
    BivarPoly h = parse_bivar("x^2 + 2*y^2", &F);
    for (long e = 2; e <= 4; ++e) {
        TruncatedIntegral ti = truncated_integral(h, quad, e, Rat(1, 2));
        CycloNum diff = Z.eval_at(Rat(1, 2)) - ti.value;
        CHECK(diff.abs_upper_bound() <= ti.tail_bound);
    }
}

TEST_CASE("perturbed binomials reduce to the bare binomial") {
    Fq F(7, 1);
    Character chi = Character::trivial(&F);
    BivarPoly h = parse_bivar("x^2 + y^3 + t*x^4", &F);
    ZetaRat Z = perturbed_binomial_zeta(h, chi);
    ZetaRat B = binomial_zeta(LocalNum::from_fq(&F, 1), 2, LocalNum::from_fq(&F, 1), 3, chi);
    CHECK(Z.equals(B));
    // the counts of the perturbed polynomial itself, not of the binomial
    auto rep = poincare_check(Z, count_profile(h, 3));
    CHECK(rep.pass);
    CAPTURE(rep.detail);

    // d = 1 keeps the perturbation in a single exact step
    BivarPoly lin = parse_bivar("3*x + y^2 + t*x^2", &F);
    check_series_agree(perturbed_binomial_zeta(lin, chi), lin, chi, 6);
}

TEST_CASE("perturbation invariance against randomized admissible tails") {
    std::mt19937 rng(20260816u);
    for (int trial = 0; trial < 20; ++trial) {
        long p = trial % 2 ? 5 : 7;
        Fq F(p, 1);
        Character chi = Character::trivial(&F);
        long d = 2 + static_cast<long>(rng() % 2);
        long m = 2 + static_cast<long>(rng() % 2);
        if (m % p == 0) m = 2;
        long e0 = static_cast<long>(rng() % 2);
        LocalNum mu1 = LocalNum::from_fq(&F, 1 + rng() % (p - 1));
        LocalNum mu2 = LocalNum::from_fq(&F, 1 + rng() % (p - 1), static_cast<int>(e0));

        BivarPoly h = BivarPoly::monomial(&F, static_cast<int>(d), 0, mu1) +
                      BivarPoly::monomial(&F, 0, static_cast<int>(m), mu2);
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            int deg = static_cast<int>(d) + 1 + static_cast<int>(rng() % 4);
            int ord = 1 + static_cast<int>(rng() % 2);
            h = h + BivarPoly::monomial(&F, deg, 0,
                                        LocalNum::from_fq(&F, 1 + rng() % (p - 1), ord));
        }
        CAPTURE(h.str());

        ZetaRat Z = perturbed_binomial_zeta(h, chi);
        CHECK(Z.equals(binomial_zeta(mu1, d, mu2, m, chi)));
        auto rep = poincare_check(Z, count_profile(h, 3));
        CHECK(rep.pass);
        CAPTURE(rep.detail);
    }
}

TEST_CASE("superelliptic curves against both oracles") {
    Fq F5(5, 1);
    Character triv = Character::trivial(&F5);
    Character quad = Character::mult(&F5, 2, 1);

    // three simple roots: the elliptic-type shape with a single pole at -1
    FactoredCurve ell;
    ell.gamma0 = LocalNum::from_fq(&F5, 1);
    ell.m = 2;
    ell.roots = {{LocalNum::from_fq(&F5, 0), 1},
                 {LocalNum::from_fq(&F5, 1), 1},
                 {LocalNum::from_fq(&F5, 2), 1}};
    ZetaRat Ze = superelliptic_zeta(ell, triv);
    CHECK(Ze.eval_at(Rat(1)) == one());
    auto poles = Ze.pole_real_parts();
    REQUIRE(poles.size() == 1);
    CHECK(poles[0] == Rat(-1));
    BivarPoly ge = expand_validate(ell);
    CHECK(poincare_check(Ze, count_profile(ge, 4)).pass);
    check_series_agree(superelliptic_zeta(ell, quad), ge, quad, 6);

    // multiplicities 2 and 3: every denominator the theory allows shows up
    FactoredCurve mult;
    mult.gamma0 = LocalNum::from_fq(&F5, 1);
    mult.m = 2;
    mult.roots = {{LocalNum::from_fq(&F5, 0), 2}, {LocalNum::from_fq(&F5, 1), 3}};
    ZetaRat Zm = superelliptic_zeta(mult, triv);
    CHECK(Zm.eval_at(Rat(1)) == one());
    CHECK(raw_within(Zm, {{1, 1}, {2, 2}, {5, 6}}));
    BivarPoly gm = expand_validate(mult);
    CHECK(poincare_check(Zm, count_profile(gm, 4)).pass);
    check_series_agree(superelliptic_zeta(mult, quad), gm, quad, 6);

    // cusp over q = 3
    Fq F3(3, 1);
    FactoredCurve cusp;
    cusp.gamma0 = LocalNum::from_fq(&F3, 1);
    cusp.m = 2;
    cusp.roots = {{LocalNum::from_fq(&F3, 0), 3}};
    ZetaRat Zc = superelliptic_zeta(cusp, Character::trivial(&F3));
    CHECK(poincare_check(Zc, count_profile(expand_validate(cusp), 4)).pass);
}

TEST_CASE("randomized curves match the expansion series") {
    std::mt19937 rng(97531u);
    for (int trial = 0; trial < 10; ++trial) {
        long p = trial % 2 ? 7 : 5;
        Fq F(p, 1);
        Character triv = Character::trivial(&F);
        Character quad = Character::mult(&F, 2, 1);

        FactoredCurve c;
        c.m = 2 + static_cast<long>(rng() % 2);
        if (c.m % p == 0) c.m = 2;
        c.gamma0 = LocalNum::from_fq(&F, 1 + rng() % (p - 1), static_cast<int>(rng() % 2));
        // distinct roots from a pool mixing residues and depths
        std::vector<LocalNum> pool = {
            LocalNum::from_fq(&F, 0),
            LocalNum::from_fq(&F, 1),
            LocalNum::from_fq(&F, 2),
            LocalNum::pi_pow(&F, 1),
            LocalNum::from_fq(&F, 1) + LocalNum::pi_pow(&F, 1),
            LocalNum::from_fq(&F, 1) + LocalNum::pi_pow(&F, 2),
        };
        std::shuffle(pool.begin(), pool.end(), rng);
        size_t nroots = 2 + rng() % 2;
        long degree = 0;
        for (size_t i = 0; i < nroots; ++i) {
            long n = 1 + static_cast<long>(rng() % 2);
            degree += n;
            c.roots.push_back({pool[i], n});
        }
        CAPTURE(p);
        CAPTURE(c.m);
        CAPTURE(degree);

        BivarPoly g = expand_validate(c);
        ZetaRat Z = superelliptic_zeta(c, triv);
        CHECK(Z.eval_at(Rat(1)) == one());
        auto rep = poincare_check(Z, count_profile(g, 3));
        CHECK(rep.pass);
        CAPTURE(rep.detail);
        check_series_agree(superelliptic_zeta(c, quad), g, quad, 5);
    }
}

TEST_CASE("deep clusters recurse to completion") {
    // gamma0 = -pi^2 with a root below the integers and a double root at 0
    Fq F3(3, 1);
    Character triv3 = Character::trivial(&F3);
    FactoredCurve remark;
    remark.gamma0 = -LocalNum::pi_pow(&F3, 2);
    remark.m = 2;
    remark.roots = {{LocalNum::pi_pow(&F3, -1), 2}, {LocalNum::from_fq(&F3, 0), 2}};
    ZetaRat Z = superelliptic_zeta(remark, triv3);
    CHECK(denominator_divides(Z, {{{1, 1}, 1}, {{2, 2}, 1}}));
    BivarPoly g = expand_validate(remark);
    CHECK(poincare_check(Z, count_profile(g, 5)).pass);

    // two clusters, one of contact order 1 and one of contact order 2
    Fq F5(5, 1);
    Character triv5 = Character::trivial(&F5);
    Character quad5 = Character::mult(&F5, 2, 1);
    FactoredCurve deep;
    deep.gamma0 = LocalNum::from_fq(&F5, 1);
    deep.m = 2;
    deep.roots = {{LocalNum::from_fq(&F5, 0), 1},
                  {LocalNum::pi_pow(&F5, 1), 1},
                  {LocalNum::from_fq(&F5, 1), 1},
                  {LocalNum::from_fq(&F5, 1) + LocalNum::pi_pow(&F5, 2), 1}};
    BivarPoly gd = expand_validate(deep);
    ZetaRat Zd = superelliptic_zeta(deep, triv5);
    CHECK(Zd.eval_at(Rat(1)) == one());
    CHECK(poincare_check(Zd, count_profile(gd, 3)).pass);
    check_series_agree(superelliptic_zeta(deep, quad5), gd, quad5, 6);
}

TEST_CASE("whole-integrand scaling shifts the zeta by one power of T") {
    std::mt19937 rng(424243u);
    for (int trial = 0; trial < 10; ++trial) {
        long p = trial % 2 ? 7 : 5;
        Fq F(p, 1);
        Character chi = trial % 3 ? Character::trivial(&F)
                                  : Character::mult(&F, 2, 1);
        ClusterForm st;
        st.m = 2 + static_cast<long>(rng() % 2);
        if (st.m % p == 0) st.m = 2;
        st.b = LocalNum::from_fq(&F, 1 + rng() % (p - 1), static_cast<int>(rng() % 3));
        st.ycoef = LocalNum::from_fq(&F, 1 + rng() % (p - 1), static_cast<int>(rng() % 2));
        if (rng() % 2)
            st.roots.push_back({LocalNum::from_fq(&F, rng() % p), 1 + static_cast<long>(rng() % 2)});
        if (rng() % 2) {
            LocalNum r2 = LocalNum::from_fq(&F, rng() % p) + LocalNum::pi_pow(&F, 1);
            bool dup = false;
            for (const auto& [g, n] : st.roots) dup = dup || g == r2;
            if (!dup) st.roots.push_back({r2, 1});
        }
        if (rng() % 2) st.tails.push_back({1, LocalNum::from_fq(&F, 1 + rng() % (p - 1)), 1});

        ZetaRat Z = cluster_zeta(st, chi);
        ClusterForm scaled = st;
        scaled.b = st.b.shifted(1);
        scaled.ycoef = st.ycoef.shifted(1);
        CHECK(cluster_zeta(scaled, chi).equals(Z.mono_mul(one(), 0, 1)));
    }
}

TEST_CASE("rescaling gamma0 by a unit m-th power twists by the character") {
    // q = 5, m = 2: u = w^2 with nontrivial chi_4(u)
    Fq F5(5, 1);
    Character four = Character::mult(&F5, 4, 1);
    FactoredCurve c;
    c.gamma0 = LocalNum::from_fq(&F5, 1);
    c.m = 2;
    c.roots = {{LocalNum::from_fq(&F5, 0), 1}, {LocalNum::from_fq(&F5, 1), 2}};
    LocalNum u = (LocalNum::from_fq(&F5, 2) + LocalNum::pi_pow(&F5, 1)).pow(2);
    FactoredCurve cu = c;
    cu.gamma0 = c.gamma0 * u;
    ZetaRat Z = superelliptic_zeta(c, four);
    CHECK(superelliptic_zeta(cu, four).equals(Z.mono_mul(four.eval_ac(u), 0, 0)));

    // q = 7, m = 3: u = w^3 with chi the quadratic character
    Fq F7(7, 1);
    Character quad = Character::mult(&F7, 2, 1);
    FactoredCurve t;
    t.gamma0 = LocalNum::from_fq(&F7, 2);
    t.m = 3;
    t.roots = {{LocalNum::from_fq(&F7, 0), 1}, {LocalNum::from_fq(&F7, 3), 1}};
    LocalNum w = LocalNum::from_fq(&F7, 3);
    LocalNum u3 = w.pow(3);
    FactoredCurve tu = t;
    tu.gamma0 = t.gamma0 * u3;
    ZetaRat Zt = superelliptic_zeta(t, quad);
    CHECK(quad.eval_ac(u3) == CycloNum::rational(Rat(-1)));
    CHECK(superelliptic_zeta(tu, quad).equals(Zt.mono_mul(quad.eval_ac(u3), 0, 0)));
}

TEST_CASE("odd character kills a square: y^2 - x vanishes") {
    Fq F(5, 1);
    Character quad = Character::mult(&F, 2, 1);
    FactoredCurve c;
    c.gamma0 = LocalNum::from_fq(&F, 1);
    c.m = 2;
    c.roots = {{LocalNum::from_fq(&F, 0), 1}};
    ZetaRat Z = superelliptic_zeta(c, quad);
    CHECK(Z.is_zero());
    check_series_agree(Z, expand_validate(c), quad, 5);
}

TEST_CASE("superelliptic with conductor-2 character matches the expansion") {
    Fq F(5, 1);
    Character wild = wild_char(&F);
    FactoredCurve c;
    c.gamma0 = LocalNum::from_fq(&F, 1);
    c.m = 2;
    c.roots = {{LocalNum::from_fq(&F, 0), 1},
               {LocalNum::from_fq(&F, 1), 1},
               {LocalNum::from_fq(&F, 2), 1}};
    BivarPoly g = expand_validate(c);
    check_series_agree(superelliptic_zeta(c, wild), g, wild, 5);

    // and through the deep-cluster path
    FactoredCurve d;
    d.gamma0 = LocalNum::from_fq(&F, 2);
    d.m = 2;
    d.roots = {{LocalNum::from_fq(&F, 0), 2}, {LocalNum::pi_pow(&F, 1), 1}};
    check_series_agree(superelliptic_zeta(d, wild), expand_validate(d), wild, 5);
}

TEST_CASE("family rejections carry the hypothesis error class") {
    Fq F5(5, 1), F3(3, 1);
    Character chi5 = Character::trivial(&F5);
    Character chi3 = Character::trivial(&F3);
    LocalNum u = LocalNum::from_fq(&F5, 1);
    LocalNum pi = LocalNum::pi_pow(&F5, 1);

    CHECK(kind_of([&] { binomial_zeta(pi, 2, u, 2, chi5); }) == errc::hypothesis);
    CHECK(kind_of([&] { binomial_zeta(u, 2, LocalNum::zero(&F5), 2, chi5); }) ==
          errc::hypothesis);
    CHECK(kind_of([&] { binomial_zeta(u, 2, u, 1, chi5); }) == errc::hypothesis);
    CHECK(kind_of([&] { binomial_zeta(u, 0, u, 2, chi5); }) == errc::invalid);
    CHECK(kind_of([&] {
              binomial_zeta(LocalNum::from_fq(&F3, 1), 2, LocalNum::from_fq(&F3, 1), 3, chi3);
          }) == errc::hypothesis);

    // shape violations of the perturbed family
    auto reject = [&](const char* src) {
        return kind_of([&] { perturbed_binomial_zeta(parse_bivar(src, &F5), chi5); });
    };
    CHECK(reject("x^2 + y^3 + t*x^2") == errc::hypothesis); // content at the leading degree
    CHECK(reject("x^2 + x^3 + y^3") == errc::hypothesis);   // second unit x term
    CHECK(reject("x^2 + y^3 + t*x*y") == errc::hypothesis); // mixed term
    CHECK(reject("x^2 + y^3 + 1") == errc::hypothesis);     // constant term
    CHECK(reject("y^3 + t*x^3") == errc::hypothesis);       // no unit x term
    CHECK(reject("x^2 + 1*y^3 + y^2") == errc::hypothesis); // two y terms
    CHECK(reject("t^-1*x^2 + y^3") == errc::hypothesis);    // non-integral coefficient
    CHECK(reject("x^2") == errc::hypothesis);               // no y term

    // curve-level rejections
    FactoredCurve pm;
    pm.gamma0 = LocalNum::from_fq(&F3, 1);
    pm.m = 3;
    pm.roots = {{LocalNum::from_fq(&F3, 0), 1}};
    CHECK(kind_of([&] { superelliptic_zeta(pm, chi3); }) == errc::hypothesis);

    FactoredCurve leak;
    leak.gamma0 = LocalNum::pi_pow(&F5, -1);
    leak.m = 2;
    leak.roots = {{LocalNum::from_fq(&F5, 0), 1}};
    CHECK(kind_of([&] { superelliptic_zeta(leak, chi5); }) == errc::hypothesis);

    // cluster-level validation
    ClusterForm cf;
    cf.b = LocalNum::zero(&F5);
    cf.ycoef = u;
    cf.m = 2;
    CHECK(kind_of([&] { cluster_zeta(cf, chi5); }) == errc::hypothesis);
    cf.b = u;
    cf.roots = {{LocalNum::pi_pow(&F5, -1), 1}};
    CHECK(kind_of([&] { cluster_zeta(cf, chi5); }) == errc::invalid);
    cf.roots = {{u, 1}, {u, 2}};
    CHECK(kind_of([&] { cluster_zeta(cf, chi5); }) == errc::invalid);
    cf.roots.clear();
    cf.tails = {{1, pi, 1}};
    CHECK(kind_of([&] { cluster_zeta(cf, chi5); }) == errc::invalid);
}
