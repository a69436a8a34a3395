#pragma once

#include <array>
#include <vector>

#include "error.hpp"

namespace igusa {

using LPoint = std::array<long, 2>;

// A simplicial cone of the dual decomposition of N^2, attached to one proper
// face of the polyhedron.  1-generator cones (facets) claim the positive
// multiples of their primitive generator; 2-generator cones (vertices) claim
// fund + a g0 + b g1 where fund ranges over the lattice points of the
// half-open parallelepiped and the index ranges depend on the offset:
// a, b >= 1 for offset (0,0) and a, b >= 0 otherwise.  Together with {0} these
// sets tile N^2 exactly.
struct Cone {
    std::vector<LPoint> gens; // 1 or 2 primitive generators, angular order
    std::vector<LPoint> fund; // S-tilde (2-generator cones), lexicographic
    long det = 0;             // |det(g0, g1)| for 2-generator cones, else 0
};

// The Newton polyhedron conv(support) + R_+^2 of a finite support in N^2.
class NewtonPoly {
public:
    explicit NewtonPoly(std::vector<LPoint> support);

    struct Facet {
        LPoint alpha;        // primitive inward normal, componentwise >= 0
        long m = 0;          // min <alpha, . > over the polyhedron
        bool compact = false;
        LPoint v0{}, v1{};   // endpoints (compact) or the single vertex (rays)
    };

    const std::vector<LPoint>& support() const { return support_; }
    // Hull vertices, x ascending / y descending.
    const std::vector<LPoint>& vertices() const { return verts_; }
    // All facets in angular order of their normals: the vertical-ray facet
    // (1,0) first, compact facets left to right, the horizontal-ray facet
    // (0,1) last.
    const std::vector<Facet>& facets() const { return facets_; }

    // min <a, .> over the polyhedron together with the support points
    // attaining it (the first meet locus, identified by its support points).
    std::pair<long, std::vector<LPoint>> m_and_face(LPoint a) const;
    long m_of(LPoint a) const { return m_and_face(a).first; }

    // One cone per proper face: facets first (1 generator, same order as
    // facets()), then vertex cones left to right (2 generators).
    std::vector<Cone> cones() const;

    // (|alpha|, m(alpha)) for every facet with m(alpha) != 0, preceded by the
    // always-present pair (1,1); duplicates are kept (callers report real
    // parts, which deduplicate naturally).
    std::vector<std::pair<long, long>> candidate_poles() const;

private:
    std::vector<LPoint> support_;
    std::vector<LPoint> verts_;
    std::vector<Facet> facets_;
};

// How many (cone, offset, index) representations of (x, y) the decomposition
// admits; exactly one for every lattice point != 0 in N^2.
int representation_count(const std::vector<Cone>& cones, long x, long y);

// The binomial mu1 x^d + mu2 y^m with unit mu1 is non-degenerate for every
// face exactly when p does not divide m: the y-partial m mu2 y^{m-1} then
// has no common zero with the face polynomials off the torus axes.
bool binomial_nondegenerate(long d, long m, long p);

} // namespace igusa
