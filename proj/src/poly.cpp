#include "poly.hpp"

#include <algorithm>

namespace igusa {

unsigned FqBivar::eval(unsigned x, unsigned y) const {
    unsigned acc = 0;
    for (const auto& [ij, v] : c)
        acc = F->add(acc, F->mul(v, F->mul(F->pow(x, ij.first), F->pow(y, ij.second))));
    return acc;
}

FqBivar FqBivar::dx() const {
    FqBivar d{F, {}};
    for (const auto& [ij, v] : c) {
        if (ij.first == 0) continue;
        unsigned nv = F->mul(v, F->from_int(ij.first));
        if (nv != 0) d.c[{ij.first - 1, ij.second}] = nv;
    }
    return d;
}

FqBivar FqBivar::dy() const {
    FqBivar d{F, {}};
    for (const auto& [ij, v] : c) {
        if (ij.second == 0) continue;
        unsigned nv = F->mul(v, F->from_int(ij.second));
        if (nv != 0) d.c[{ij.first, ij.second - 1}] = nv;
    }
    return d;
}

void BivarPoly::put(int i, int j, const LocalNum& v) {
    if (v.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = c_.find(key);
    if (it == c_.end()) {
        c_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

BivarPoly BivarPoly::monomial(const Fq* F, int i, int j, LocalNum coef) {
    if (i < 0 || j < 0) fail(errc::invalid, "polynomial supports must be nonnegative");
    BivarPoly p(F);
    p.put(i, j, coef);
    return p;
}

LocalNum BivarPoly::coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? LocalNum::zero(F_) : it->second;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly p = *this;
    if (!p.F_) p.F_ = o.F_;
    for (const auto& [ij, v] : o.c_) p.put(ij.first, ij.second, v);
    return p;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    BivarPoly p = *this;
    if (!p.F_) p.F_ = o.F_;
    for (const auto& [ij, v] : o.c_) p.put(ij.first, ij.second, -v);
    return p;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly p(F_ ? F_ : o.F_);
    for (const auto& [a, va] : c_)
        for (const auto& [b, vb] : o.c_) p.put(a.first + b.first, a.second + b.second, va * vb);
    return p;
}

BivarPoly BivarPoly::scaled(const LocalNum& s) const {
    BivarPoly p(F_);
    for (const auto& [ij, v] : c_) p.put(ij.first, ij.second, v * s);
    return p;
}

BivarPoly BivarPoly::pow(long e) const {
    if (e < 0) fail(errc::internal, "BivarPoly::pow: negative exponent");
    BivarPoly r = constant(F_, LocalNum::from_fq(F_, 1));
    BivarPoly b = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        b = b * b;
    }
    return r;
}

LocalNum BivarPoly::eval(const LocalNum& x, const LocalNum& y) const {
    // Horner over y, then over x within each y-coefficient.
    std::map<int, std::map<int, LocalNum>> by_j;
    for (const auto& [ij, v] : c_) by_j[ij.second][ij.first] = v;
    LocalNum acc = LocalNum::zero(F_);
    int prev_j = -1;
    // Iterate j descending.
    for (auto jt = by_j.rbegin(); jt != by_j.rend(); ++jt) {
        if (prev_j >= 0) acc = acc * y.pow(prev_j - jt->first);
        LocalNum cj = LocalNum::zero(F_);
        int prev_i = -1;
        for (auto it = jt->second.rbegin(); it != jt->second.rend(); ++it) {
            if (prev_i >= 0) cj = cj * x.pow(prev_i - it->first);
            cj += it->second;
            prev_i = it->first;
        }
        if (prev_i > 0) cj = cj * x.pow(prev_i);
        acc += cj;
        prev_j = jt->first;
    }
    if (prev_j > 0) acc = acc * y.pow(prev_j);
    return acc;
}

BivarPoly BivarPoly::subst_affine(const LocalNum& ax, const LocalNum& bx, const LocalNum& ay,
                                  const LocalNum& by) const {
    BivarPoly X = monomial(F_, 1, 0, bx) + constant(F_, ax);
    BivarPoly Y = monomial(F_, 0, 1, by) + constant(F_, ay);
    BivarPoly out(F_);
    for (const auto& [ij, v] : c_)
        out = out + (X.pow(ij.first) * Y.pow(ij.second)).scaled(v);
    return out;
}

BivarPoly BivarPoly::dx() const {
    BivarPoly d(F_);
    for (const auto& [ij, v] : c_) {
        if (ij.first == 0) continue;
        d.put(ij.first - 1, ij.second, v * LocalNum::from_int(F_, ij.first));
    }
    return d;
}

BivarPoly BivarPoly::dy() const {
    BivarPoly d(F_);
    for (const auto& [ij, v] : c_) {
        if (ij.second == 0) continue;
        d.put(ij.first, ij.second - 1, v * LocalNum::from_int(F_, ij.second));
    }
    return d;
}

bool BivarPoly::is_integral() const {
    for (const auto& [ij, v] : c_)
        if (!v.is_integral()) return false;
    return true;
}

std::optional<int> BivarPoly::min_ord() const {
    std::optional<int> m;
    for (const auto& [ij, v] : c_) {
        int o = *v.ord();
        if (!m || o < *m) m = o;
    }
    return m;
}

BivarPoly BivarPoly::coeff_shifted(int e) const {
    BivarPoly p(F_);
    for (const auto& [ij, v] : c_) p.c_.emplace(ij, v.shifted(e));
    return p;
}

FqBivar BivarPoly::reduce_mod_pi() const {
    if (!is_integral()) fail(errc::invalid, "reduction mod pi of a non-integral polynomial");
    FqBivar r{F_, {}};
    for (const auto& [ij, v] : c_) {
        unsigned u = v.coeff(0);
        if (u != 0) r.c[ij] = u;
    }
    return r;
}

int BivarPoly::deg_x() const {
    int d = 0;
    for (const auto& [ij, v] : c_) d = std::max(d, ij.first);
    return d;
}

int BivarPoly::deg_y() const {
    int d = 0;
    for (const auto& [ij, v] : c_) d = std::max(d, ij.second);
    return d;
}

std::string BivarPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [ij, v] : c_) {
        if (!out.empty()) out += " + ";
        std::string coef = v.str();
        if (coef.find(' ') != std::string::npos) coef = "(" + coef + ")";
        bool unit_coef = coef == "1";
        std::string mono;
        if (ij.first > 0) mono += ij.first == 1 ? "x" : "x^" + std::to_string(ij.first);
        if (ij.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += ij.second == 1 ? "y" : "y^" + std::to_string(ij.second);
        }
        if (mono.empty()) out += coef;
        else if (unit_coef) out += mono;
        else out += coef + "*" + mono;
    }
    return out;
}

BivarPoly expand_validate(const FactoredCurve& curve) {
    const Fq* F = curve.gamma0.field();
    if (!F) fail(errc::invalid, "curve: missing coefficient field");
    if (curve.gamma0.is_zero()) fail(errc::hypothesis, "curve: gamma0 must be nonzero");
    if (curve.m < 2) fail(errc::hypothesis, "curve: m must be >= 2");
    if (F->p() > 0 && curve.m % F->p() == 0)
        fail(errc::hypothesis, "curve: p = " + std::to_string(F->p()) + " divides m = " +
                                   std::to_string(curve.m));
    for (size_t i = 0; i < curve.roots.size(); ++i) {
        if (curve.roots[i].second < 1) fail(errc::hypothesis, "curve: multiplicities must be >= 1");
        for (size_t j = i + 1; j < curve.roots.size(); ++j)
            if (curve.roots[i].first == curve.roots[j].first)
                fail(errc::hypothesis, "curve: repeated root " + curve.roots[i].first.str());
    }

    // Necessary condition first, so the failure is attributable.  Writing
    // k = sum of multiplicities of the roots of nonnegative order, the
    // coefficient of x^k picks up every negative-order root as a constant, and
    // that combination has strictly minimal order among the contributions, so
    // ord(coeff of x^k) = ord(gamma0) + sum_{ord(gamma_i)<0} n_i ord(gamma_i).
    // Integrality therefore forces this sum to be >= 0.
    long lead = curve.gamma0.ord().value();
    for (const auto& [g, n] : curve.roots) {
        auto o = g.ord();
        if (o && *o < 0) lead += n * *o;
    }
    if (lead < 0)
        fail(errc::hypothesis,
             "curve: ord(gamma0) + sum_{ord(gamma_i)<0} n_i ord(gamma_i) = " + std::to_string(lead) +
                 " < 0, so the expansion cannot be integral");

    BivarPoly f = BivarPoly::constant(F, curve.gamma0);
    for (const auto& [g, n] : curve.roots) {
        BivarPoly lin = BivarPoly::monomial(F, 1, 0, LocalNum::from_fq(F, 1)) -
                        BivarPoly::constant(F, g);
        f = f * lin.pow(n);
    }
    BivarPoly g = BivarPoly::monomial(F, 0, static_cast<int>(curve.m), LocalNum::from_fq(F, 1)) - f;
    for (const auto& [ij, v] : g.terms())
        if (!v.is_integral())
            fail(errc::hypothesis, "curve: expanded coefficient of x^" + std::to_string(ij.first) +
                                       " is not integral: " + v.str());
    return g;
}

} // namespace igusa
