#include "oracle.hpp"

#include <algorithm>

#include "error.hpp"
#include "rational.hpp"
#include "spf.hpp"

namespace igusa {

namespace {

// Residue-class arithmetic mod pi^e on flat digit buffers.  An element of
// O/pi^e is its digit vector d[0..e-1]; addition is coefficientwise in F_q
// and multiplication is truncated convolution (equal characteristic, so
// there are no carries).
using Buf = std::vector<unsigned>;

struct TruncOps {
    const Fq* F;
    long e;

    void acc(const Buf& a, Buf& out) const {
        for (long i = 0; i < e; ++i)
            if (a[i]) out[i] = F->add(out[i], a[i]);
    }
    void acc_mul(const Buf& a, const Buf& b, Buf& out) const {
        for (long i = 0; i < e; ++i) {
            unsigned ai = a[i];
            if (!ai) continue;
            for (long j = 0; i + j < e; ++j)
                if (b[j]) out[i + j] = F->add(out[i + j], F->mul(ai, b[j]));
        }
    }
    void mul(const Buf& a, const Buf& b, Buf& out) const {
        std::fill(out.begin(), out.end(), 0u);
        acc_mul(a, b, out);
    }
};

long long pairs_or_fail(long q, long e, long long budget) {
    long long n = 1;
    for (long i = 0; i < 2 * e; ++i) {
        if (n > budget / q)
            fail(errc::budget, "residue enumeration needs q^" + std::to_string(2 * e) +
                                   " pairs, over the budget of " + std::to_string(budget));
        n *= q;
    }
    return n;
}

// Calls fn(v) with the digit buffer of g(x, y) mod pi^e for every residue
// pair (x, y).  Evaluation is Horner in y with per-x precomputed coefficient
// rows, so the inner loop costs deg_y truncated products.
template <class Fn>
void for_each_value(const BivarPoly& g, long e, long long budget, Fn&& fn) {
    const Fq* F = g.field();
    long qv = F->q();
    pairs_or_fail(qv, e, budget);
    if (!g.is_integral()) fail(errc::invalid, "residue enumeration needs an integral polynomial");

    long dx = 0, dy = 0;
    for (const auto& [ij, coef] : g.terms()) {
        dx = std::max(dx, (long)ij.first);
        dy = std::max(dy, (long)ij.second);
    }
    // coefficient digits, grouped by y-degree
    std::vector<std::vector<std::pair<long, Buf>>> rows(dy + 1);
    for (const auto& [ij, coef] : g.terms())
        rows[ij.second].push_back({ij.first, coef.digits(e)});

    TruncOps R{F, e};
    std::vector<Buf> xpow(dx + 1, Buf(e, 0u));
    if (e > 0) xpow[0][0] = F->from_int(1);
    std::vector<Buf> acoef(dy + 1, Buf(e, 0u));
    Buf xd(e, 0u), yd(e, 0u), val(e, 0u), tmp(e, 0u);
    unsigned qu = static_cast<unsigned>(qv);

    auto advance = [&](Buf& d) {
        for (long i = 0; i < e; ++i) {
            if (++d[i] < qu) return true;
            d[i] = 0;
        }
        return false;
    };

    do {
        for (long i = 1; i <= dx; ++i) R.mul(xpow[i - 1], xd, xpow[i]);
        for (long j = 0; j <= dy; ++j) {
            std::fill(acoef[j].begin(), acoef[j].end(), 0u);
            for (const auto& [i, cd] : rows[j]) R.acc_mul(cd, xpow[i], acoef[j]);
        }
        std::fill(yd.begin(), yd.end(), 0u);
        do {
            std::copy(acoef[dy].begin(), acoef[dy].end(), val.begin());
            for (long j = dy - 1; j >= 0; --j) {
                R.mul(val, yd, tmp);
                std::swap(val, tmp);
                R.acc(acoef[j], val);
            }
            fn(static_cast<const Buf&>(val));
        } while (advance(yd));
    } while (advance(xd));
}

} // namespace

long long count_mod(const BivarPoly& g, long e, long long budget) {
    if (e < 0) fail(errc::invalid, "negative truncation depth");
    if (e == 0) return 1;
    long long n = 0;
    for_each_value(g, e, budget, [&](const Buf& v) {
        for (unsigned d : v)
            if (d) return;
        ++n;
    });
    return n;
}

CountProfile count_profile(const BivarPoly& g, long e_max, long long budget) {
    if (e_max < 0) fail(errc::invalid, "negative truncation depth");
    CountProfile out;
    out.e_max = e_max;
    for (long e = 0; e <= e_max; ++e) out.counts.push_back(count_mod(g, e, budget));
    return out;
}

PoincareReport poincare_check(const ZetaRat& Z, const CountProfile& profile) {
    if ((long)profile.counts.size() != profile.e_max + 1)
        fail(errc::invalid, "count profile is missing entries");
    if (profile.counts[0] != 1) fail(errc::invalid, "count profile must start with N_0 = 1");
    PoincareReport rep;
    long q = Z.q();
    std::vector<CycloNum> z = Z.series(profile.e_max);
    for (long e = 0; e < profile.e_max; ++e) {
        Rat inc = Rat(static_cast<long>(profile.counts[e])) * rat_qpow(q, -2 * e) -
                  Rat(static_cast<long>(profile.counts[e + 1])) * rat_qpow(q, -2 * e - 2);
        if (!(z[e] == CycloNum::rational(inc))) {
            rep.pass = false;
            rep.first_mismatch = e;
            rep.detail = "counts give " + rat_str(inc) + ", series gives " + z[e].str();
            return rep;
        }
    }
    return rep;
}

TruncatedIntegral truncated_integral(const BivarPoly& g, const Character& chi, long e,
                                     const Rat& t0, long long budget) {
    if (!(t0 > 0 && t0 < 1)) fail(errc::invalid, "evaluation point must lie in (0, 1)");
    long c = chi.conductor();
    if (e < c + 1) fail(errc::invalid, "truncation depth must exceed the conductor");
    const Fq* F = g.field();
    long qv = F->q();
    long N = chi.order();
    long kmax = e - 1 - c; // deepest order whose character value is determined

    std::vector<std::vector<long long>> det(e, std::vector<long long>(N, 0));
    long long undetermined = 0;
    for_each_value(g, e, budget, [&](const Buf& v) {
        long k = -1;
        for (long i = 0; i < e; ++i)
            if (v[i]) {
                k = i;
                break;
            }
        if (k < 0 || k > kmax) {
            ++undetermined;
            return;
        }
        long j = 0;
        if (c > 0) {
            long key = 0;
            for (long i = k + c - 1; i >= k; --i) key = key * qv + v[i];
            j = chi.exponent_at_key(key);
        }
        ++det[k][j];
    });

    TruncatedIntegral out;
    Rat mass = rat_qpow(qv, -2 * e);
    out.value = CycloNum::rational(Rat(0));
    for (long k = 0; k <= kmax; ++k)
        for (long j = 0; j < N; ++j)
            if (det[k][j]) {
                Rat w = Rat(static_cast<long>(det[k][j])) * rat_pow(t0, k) * mass;
                out.value = out.value + CycloNum::root_of_unity(N, j).scaled(w);
            }
    out.tail_bound = Rat(static_cast<long>(undetermined)) * mass;
    return out;
}

std::vector<CycloNum> series_by_expansion(const BivarPoly& g, const Character& chi, long order) {
    if (order < 0) fail(errc::invalid, "negative series order");
    std::vector<CycloNum> out(order + 1, CycloNum::rational(Rat(0)));
    if (g.is_zero()) return out; // the integrand vanishes identically
    if (!g.is_integral()) fail(errc::invalid, "series expansion needs an integral polynomial");

    // Peel the pi-content: Z_{pi^c h} = T^c Z_h, and the character only sees
    // the angular component, so nothing else changes.
    long c = *g.min_ord();
    long sub = order - c;
    if (sub < 0) return out;
    BivarPoly h = c == 0 ? g : g.coeff_shifted((int)-c);

    SPFOutcome step = spf_step(h, ResidueDomain::full2(), chi);
    std::vector<CycloNum> base = step.rational_part.series(sub);
    for (long j = 0; j <= sub; ++j) out[j + c] = out[j + c] + base[j];

    Rat m = rat_qpow(g.field()->q(), -2);
    for (const Residual& r : step.residuals) {
        // Each residual gains pi-content, so the recursion depth is bounded
        // by the requested order.
        if (!r.g.is_zero() && *r.g.min_ord() < 1)
            fail(errc::internal, "residual without pi-content");
        std::vector<CycloNum> rec = series_by_expansion(r.g, chi, sub);
        for (long j = 0; j <= sub; ++j) out[j + c] = out[j + c] + rec[j].scaled(m);
    }
    return out;
}

} // namespace igusa
