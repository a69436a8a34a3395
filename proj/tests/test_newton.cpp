#include <doctest.h>

#include <random>

#include "newton.hpp"
#include "rational.hpp"

using namespace igusa;

namespace {

void check_tiling(const NewtonPoly& P, long B) {
    auto cones = P.cones();
    for (long x = 0; x <= B; ++x)
        for (long y = 0; y <= B; ++y) {
            if (x == 0 && y == 0) continue;
            INFO("point (", x, ", ", y, ")");
            CHECK(representation_count(cones, x, y) == 1);
        }
}

} // namespace

TEST_CASE("binomial support has the five-face structure") {
    NewtonPoly P({{3, 0}, {0, 2}});
    REQUIRE(P.vertices().size() == 2);
    CHECK(P.vertices()[0] == LPoint{0, 2});
    CHECK(P.vertices()[1] == LPoint{3, 0});

    auto& fs = P.facets();
    REQUIRE(fs.size() == 3); // plus 2 vertices = five proper faces
    CHECK(fs[0].alpha == LPoint{1, 0});
    CHECK(fs[0].m == 0);
    CHECK(!fs[0].compact);
    CHECK(fs[1].alpha == LPoint{2, 3});
    CHECK(fs[1].m == 6);
    CHECK(fs[1].compact);
    CHECK(fs[2].alpha == LPoint{0, 1});
    CHECK(fs[2].m == 0);

    auto cones = P.cones();
    REQUIRE(cones.size() == 5);
    // Ray cones carry no fundamental points.
    for (int i = 0; i < 3; ++i) {
        CHECK(cones[i].gens.size() == 1);
        CHECK(cones[i].fund.empty());
    }
    // Vertex (0,2): generators (1,0),(2,3), determinant 3.
    CHECK(cones[3].gens == std::vector<LPoint>{{1, 0}, {2, 3}});
    CHECK(cones[3].fund == std::vector<LPoint>{{0, 0}, {1, 1}, {2, 2}});
    // Vertex (3,0): generators (2,3),(0,1), determinant 2.
    CHECK(cones[4].gens == std::vector<LPoint>{{2, 3}, {0, 1}});
    CHECK(cones[4].fund == std::vector<LPoint>{{0, 0}, {1, 2}});
}

TEST_CASE("single-point support") {
    NewtonPoly P({{1, 0}});
    auto& fs = P.facets();
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].alpha == LPoint{1, 0});
    CHECK(fs[0].m == 1);
    CHECK(fs[1].alpha == LPoint{0, 1});
    CHECK(fs[1].m == 0);

    auto cones = P.cones();
    REQUIRE(cones.size() == 3);
    CHECK(cones[2].gens == std::vector<LPoint>{{1, 0}, {0, 1}});
    CHECK(cones[2].fund == std::vector<LPoint>{{0, 0}});

    auto poles = P.candidate_poles();
    // (1,1) always, plus the facet (1,0) with m = 1: same real part -1.
    for (auto [a, b] : poles) CHECK(Rat(-a, b) == Rat(-1));
}

TEST_CASE("interior support points do not become vertices") {
    NewtonPoly P({{2, 0}, {0, 2}, {1, 1}});
    REQUIRE(P.vertices().size() == 2);
    auto& fs = P.facets();
    REQUIRE(fs.size() == 3);
    CHECK(fs[1].alpha == LPoint{1, 1});
    CHECK(fs[1].m == 2);
    // (1,1) lies on that compact facet.
    auto [m, face] = P.m_and_face({1, 1});
    CHECK(m == 2);
    CHECK(face == std::vector<LPoint>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("first meet loci") {
    NewtonPoly P({{3, 0}, {0, 2}});
    auto [m1, f1] = P.m_and_face({1, 1});
    CHECK(m1 == 2);
    CHECK(f1 == std::vector<LPoint>{{0, 2}});
    auto [m2, f2] = P.m_and_face({2, 3});
    CHECK(m2 == 6);
    CHECK(f2 == std::vector<LPoint>{{0, 2}, {3, 0}});
    auto [m3, f3] = P.m_and_face({0, 1});
    CHECK(m3 == 0);
    CHECK(f3 == std::vector<LPoint>{{3, 0}});
    CHECK_THROWS_AS(P.m_and_face({0, 0}), error);
}

TEST_CASE("candidate poles") {
    NewtonPoly P({{3, 0}, {0, 2}});
    auto poles = P.candidate_poles();
    REQUIRE(poles.size() == 2);
    CHECK(poles[0] == std::pair(1L, 1L));
    CHECK(poles[1] == std::pair(5L, 6L));

    // (2,2) has the same real part as (1,1); the report keeps the pair level.
    NewtonPoly Q({{2, 0}, {0, 2}});
    auto qp = Q.candidate_poles();
    REQUIRE(qp.size() == 2);
    CHECK(qp[1] == std::pair(2L, 2L));
}

TEST_CASE("lattice tiling on the binomial and degenerate shapes") {
    check_tiling(NewtonPoly({{3, 0}, {0, 2}}), 20);
    check_tiling(NewtonPoly({{1, 0}}), 20);
    check_tiling(NewtonPoly({{2, 0}, {0, 3}}), 20);
    check_tiling(NewtonPoly({{0, 0}}), 12); // everything in the vertex cone
}

TEST_CASE("lattice tiling on random staircases") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> coord(0, 8), count(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<LPoint> support;
        long n = count(rng);
        for (long i = 0; i < n; ++i) support.push_back({coord(rng), coord(rng)});
        NewtonPoly P(support);
        check_tiling(P, 20);
    }
}

TEST_CASE("facet m values agree with brute force on random supports") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coord(0, 9), count(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<LPoint> support;
        long n = count(rng);
        for (long i = 0; i < n; ++i) support.push_back({coord(rng), coord(rng)});
        NewtonPoly P(support);
        for (const auto& f : P.facets()) {
            long brute = f.alpha[0] * support[0][0] + f.alpha[1] * support[0][1];
            for (auto p : support)
                brute = std::min(brute, f.alpha[0] * p[0] + f.alpha[1] * p[1]);
            CHECK(f.m == brute);
        }
        for (const auto& c : P.cones())
            if (c.gens.size() == 2)
                CHECK(static_cast<long>(c.fund.size()) == c.det);
    }
}

TEST_CASE("non-degeneracy criterion for binomials") {
    CHECK(binomial_nondegenerate(3, 2, 5));
    CHECK(!binomial_nondegenerate(2, 3, 3));
    CHECK(binomial_nondegenerate(0, 2, 5));
    CHECK_THROWS_AS(binomial_nondegenerate(1, 0, 5), error);
}
