#include "newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace igusa {

namespace {

long dot(LPoint a, LPoint b) { return a[0] * b[0] + a[1] * b[1]; }
long cross(LPoint a, LPoint b) { return a[0] * b[1] - a[1] * b[0]; }

LPoint primitive(LPoint v) {
    long g = std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]);
    if (g == 0) fail(errc::internal, "primitive of the zero vector");
    return {v[0] / g, v[1] / g};
}

} // namespace

NewtonPoly::NewtonPoly(std::vector<LPoint> support) {
    if (support.empty()) fail(errc::invalid, "newton polyhedron: empty support");
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (LPoint p : support)
        if (p[0] < 0 || p[1] < 0)
            fail(errc::invalid, "newton polyhedron: support points must be in N^2");
    support_ = support;

    // Pareto-minimal points, the only candidates for hull vertices.
    std::vector<LPoint> min_pts;
    for (LPoint p : support_) {
        bool dominated = false;
        for (LPoint q : support_)
            if (q != p && q[0] <= p[0] && q[1] <= p[1]) { dominated = true; break; }
        if (!dominated) min_pts.push_back(p);
    }
    // Already sorted by x ascending; on the Pareto set y is strictly
    // decreasing.  Keep only vertices of the lower-left convex chain (edge
    // slopes strictly increasing toward 0).
    std::vector<LPoint> chain;
    for (LPoint p : min_pts) {
        while (chain.size() >= 2) {
            LPoint a = chain[chain.size() - 2], b = chain.back();
            LPoint e1{b[0] - a[0], b[1] - a[1]}, e2{p[0] - b[0], p[1] - b[1]};
            if (cross(e1, e2) <= 0) chain.pop_back(); // b is not a vertex
            else break;
        }
        chain.push_back(p);
    }
    verts_ = chain;

    // Facets in angular order of normals: (1,0), compact edges, (0,1).
    Facet left;
    left.alpha = {1, 0};
    left.m = verts_.front()[0];
    left.v0 = left.v1 = verts_.front();
    facets_.push_back(left);
    for (size_t i = 0; i + 1 < verts_.size(); ++i) {
        LPoint a = verts_[i], b = verts_[i + 1];
        Facet f;
        f.alpha = primitive({a[1] - b[1], b[0] - a[0]});
        f.m = dot(f.alpha, a);
        f.compact = true;
        f.v0 = a;
        f.v1 = b;
        facets_.push_back(f);
    }
    Facet bottom;
    bottom.alpha = {0, 1};
    bottom.m = verts_.back()[1];
    bottom.v0 = bottom.v1 = verts_.back();
    facets_.push_back(bottom);
}

std::pair<long, std::vector<LPoint>> NewtonPoly::m_and_face(LPoint a) const {
    if (a[0] == 0 && a[1] == 0) fail(errc::invalid, "m_and_face: zero vector");
    if (a[0] < 0 || a[1] < 0) fail(errc::invalid, "m_and_face: direction outside N^2");
    long best = dot(a, support_[0]);
    for (LPoint p : support_) best = std::min(best, dot(a, p));
    std::vector<LPoint> face;
    for (LPoint p : support_)
        if (dot(a, p) == best) face.push_back(p);
    return {best, face};
}

std::vector<Cone> NewtonPoly::cones() const {
    std::vector<Cone> out;
    for (const Facet& f : facets_) {
        Cone c;
        c.gens = {f.alpha};
        out.push_back(c);
    }
    // Vertex cones: adjacent facet normals in angular order.
    for (size_t i = 0; i + 1 < facets_.size(); ++i) {
        LPoint u = facets_[i].alpha, v = facets_[i + 1].alpha;
        Cone c;
        c.gens = {u, v};
        long d = cross(u, v);
        if (d == 0) fail(errc::internal, "vertex cone with parallel generators");
        long sgn = d > 0 ? 1 : -1;
        c.det = sgn * d;
        // Lattice points of {s u + t v : 0 <= s,t < 1}: solve the 2x2 system
        // exactly and test 0 <= s,t < 1 as integer inequalities.
        for (long x = 0; x <= std::max(0L, u[0] + v[0] - 1); ++x)
            for (long y = 0; y <= std::max(0L, u[1] + v[1] - 1); ++y) {
                long sn = sgn * (x * v[1] - y * v[0]);
                long tn = sgn * (u[0] * y - u[1] * x);
                if (sn >= 0 && sn < c.det && tn >= 0 && tn < c.det)
                    c.fund.push_back({x, y});
            }
        std::sort(c.fund.begin(), c.fund.end());
        if (static_cast<long>(c.fund.size()) != c.det)
            fail(errc::internal, "fundamental domain size disagrees with the determinant");
        out.push_back(c);
    }
    return out;
}

std::vector<std::pair<long, long>> NewtonPoly::candidate_poles() const {
    std::vector<std::pair<long, long>> out;
    out.push_back({1, 1});
    for (const Facet& f : facets_)
        if (f.m != 0) out.push_back({f.alpha[0] + f.alpha[1], f.m});
    return out;
}

int representation_count(const std::vector<Cone>& cones, long x, long y) {
    int count = 0;
    for (const Cone& c : cones) {
        if (c.gens.size() == 1) {
            LPoint g = c.gens[0];
            long a;
            if (g[0] != 0) {
                if (x % g[0] != 0) continue;
                a = x / g[0];
            } else {
                if (g[1] == 0 || y % g[1] != 0) continue;
                a = y / g[1];
            }
            if (a >= 1 && a * g[0] == x && a * g[1] == y) ++count;
            continue;
        }
        LPoint u = c.gens[0], v = c.gens[1];
        long d = u[0] * v[1] - u[1] * v[0];
        long sgn = d > 0 ? 1 : -1;
        long ad = sgn * d;
        for (LPoint f : c.fund) {
            long rx = x - f[0], ry = y - f[1];
            long an = sgn * (rx * v[1] - ry * v[0]);
            long bn = sgn * (u[0] * ry - u[1] * rx);
            if (an % ad != 0 || bn % ad != 0) continue;
            long a = an / ad, b = bn / ad;
            bool zero_offset = f[0] == 0 && f[1] == 0;
            long lo = zero_offset ? 1 : 0;
            if (a >= lo && b >= lo) ++count;
        }
    }
    return count;
}

bool binomial_nondegenerate(long d, long m, long p) {
    if (d < 0 || m < 1 || p < 2) fail(errc::invalid, "binomial_nondegenerate: bad shape");
    return m % p != 0;
}

} // namespace igusa
