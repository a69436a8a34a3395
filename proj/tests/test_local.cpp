#include <doctest.h>

#include <random>

#include "local.hpp"

using namespace igusa;

TEST_CASE("ord and angular component") {
    Fq F(5, 1);
    LocalNum x = LocalNum::from_terms(&F, {{2, 3}});            // 3 t^2
    LocalNum y = LocalNum::from_terms(&F, {{-1, 2}, {0, 1}});   // 2 t^-1 + 1
    CHECK(x.ord() == std::optional<int>(2));
    CHECK(y.ord() == std::optional<int>(-1));
    CHECK(LocalNum::zero(&F).ord() == std::nullopt);
    CHECK(x.ac() == LocalNum::from_fq(&F, 3));
    CHECK(y.ac() == LocalNum::from_terms(&F, {{0, 2}, {1, 1}}));
    CHECK_THROWS_AS(LocalNum::zero(&F).ac(), error);
    CHECK(x.is_integral());
    CHECK(!y.is_integral());
    CHECK(!x.is_unit());
    CHECK(y.ac().is_unit());
}

TEST_CASE("exact Laurent arithmetic") {
    Fq F(5, 1);
    LocalNum y = LocalNum::from_terms(&F, {{-1, 2}, {0, 1}}); // 2 t^-1 + 1
    LocalNum pi = LocalNum::pi_pow(&F, 1);
    CHECK(y * pi == LocalNum::from_terms(&F, {{0, 2}, {1, 1}}));
    // (2 t^-1 + 1) - 2 t^-1 = 1: cancellation drops the term entirely.
    LocalNum d = y - LocalNum::from_terms(&F, {{-1, 2}});
    CHECK(d == LocalNum::from_fq(&F, 1));
    // 3 + 2 = 0 in F_5: sums can vanish.
    LocalNum z = LocalNum::from_fq(&F, 3) + LocalNum::from_fq(&F, 2);
    CHECK(z.is_zero());
    CHECK((y * LocalNum::zero(&F)).is_zero());
    CHECK(y.pow(2) == y * y);
    CHECK(y.pow(0) == LocalNum::from_fq(&F, 1));
    CHECK(LocalNum::from_int(&F, -3) == LocalNum::from_fq(&F, 2));
}

TEST_CASE("ultrametric inequality, with equality at distinct orders") {
    Fq F(3, 1);
    std::mt19937 rng(12345);
    auto rnd = [&]() {
        LocalNum x(&F);
        std::vector<std::pair<int, unsigned>> terms;
        for (int e = -2; e <= 4; ++e)
            if (rng() % 3 == 0) terms.push_back({e, 1u + rng() % 2});
        return LocalNum::from_terms(&F, terms);
    };
    for (int trial = 0; trial < 200; ++trial) {
        LocalNum a = rnd(), b = rnd(), s = a + b;
        if (a.is_zero() || b.is_zero() || s.is_zero()) continue;
        int oa = *a.ord(), ob = *b.ord(), os = *s.ord();
        CHECK(os >= std::min(oa, ob));
        if (oa != ob) CHECK(os == std::min(oa, ob));
        // ord is additive on products.
        LocalNum p = a * b;
        CHECK(*p.ord() == oa + ob);
    }
}

TEST_CASE("digits, keys and truncation") {
    Fq F(3, 1);
    LocalNum x = LocalNum::from_terms(&F, {{0, 2}, {1, 1}, {3, 2}}); // 2 + t + 2t^3
    CHECK(x.digits(3) == std::vector<unsigned>{2, 1, 0});
    CHECK(x.residue() == 2);
    CHECK(x.residue_key(2) == 2 + 3 * 1);
    CHECK(x.truncated(2) == LocalNum::from_terms(&F, {{0, 2}, {1, 1}}));
    LocalNum bad = LocalNum::from_terms(&F, {{-1, 1}});
    CHECK_THROWS_AS(bad.digits(2), error);
    CHECK(x.str() == "2 + t + 2*t^3");
    CHECK(LocalNum::from_terms(&F, {{-1, 2}, {2, 1}}).str() == "2*t^-1 + t^2");
}
