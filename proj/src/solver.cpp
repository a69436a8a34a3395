#include "solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

#include "error.hpp"
#include "newton.hpp"
#include "spf.hpp"

namespace igusa {

namespace {

CycloNum one() { return CycloNum::rational(Rat(1)); }

ResidueDomain full_by_units() {
    return ResidueDomain::product({AxisDomain::full, 0}, {AxisDomain::units, 0});
}

// Closed form of Z for mu1 x^d + mu2 y^m with d >= 2, as the sum over the
// cosets pi^{a1} O^x x pi^{a2} O^x, a in N^2.  On such a coset the integrand
// is pi^{e(a)} times a unit-square integrand whose reduction depends only on
// which of the two terms carries the minimal order, so every lattice point
// contributes U(branch) q^{-a1-a2} T^{e(a)} with one of three cached
// unit-square values.  The cone decomposition of N^2 groups the points into
// finitely many families whose sums close geometrically; every closure is
// first verified against one further explicitly computed term.
class BinomialEngine {
public:
    BinomialEngine(const LocalNum& mu1, long d, const LocalNum& mu2, long m,
                   const Character& chi)
        : F_(chi.field()), chi_(chi), mu1_(mu1), d_(d), m_(m) {
        e0_ = *mu2.ord();
        mu2hat_ = mu2.shifted(-static_cast<int>(e0_));
    }

    ZetaRat run() {
        NewtonPoly np({{d_, 0}, {0, m_}});
        ZetaRat Z = term({0, 0}); // the units-square coset itself
        for (const Cone& c : np.cones())
            Z += c.gens.size() == 1 ? ray(c.gens[0]) : vertex(c);
        return Z;
    }

private:
    const Fq* F_;
    const Character& chi_;
    LocalNum mu1_, mu2hat_;
    long d_, m_, e0_ = 0;
    std::optional<ZetaRat> cache_[4];

    long e_of(LPoint a) const { return std::min(d_ * a[0], e0_ + m_ * a[1]); }
    int branch(LPoint a) const {
        long diff = d_ * a[0] - (e0_ + m_ * a[1]);
        return diff < 0 ? 1 : diff > 0 ? 2 : 3;
    }
    static LPoint at(LPoint base, LPoint g, long j) {
        return {base[0] + j * g[0], base[1] + j * g[1]};
    }

    // Unit-square value of the three possible reductions: the x-term alone,
    // the y-term alone, or the full binomial on a tie.  The representative
    // puts one power of pi on the recessive term; any higher power gives the
    // same reduction and hence the same value.
    const ZetaRat& U(int br) {
        if (!cache_[br]) {
            BivarPoly rep =
                BivarPoly::monomial(F_, static_cast<int>(d_), 0,
                                    br == 2 ? mu1_.shifted(1) : mu1_) +
                BivarPoly::monomial(F_, 0, static_cast<int>(m_),
                                    br == 1 ? mu2hat_.shifted(1) : mu2hat_);
            cache_[br] = unit_square_zeta(rep, chi_);
        }
        return *cache_[br];
    }

    ZetaRat term(LPoint a) { return U(branch(a)).mono_mul(one(), a[0] + a[1], e_of(a)); }

    // Sum over j >= 1 of term(j g).  Once j exceeds e0 the minimizing term
    // can no longer switch, so the tail starting at e0 + 1 is geometric.
    ZetaRat ray(LPoint g) {
        long jbase = e0_ + 1;
        ZetaRat sum = ZetaRat::zero(F_->q());
        for (long j = 1; j < jbase; ++j) sum += term(at({0, 0}, g, j));
        ZetaRat base = term(at({0, 0}, g, jbase));
        QPow rho{g[0] + g[1], e_of(at({0, 0}, g, jbase + 1)) - e_of(at({0, 0}, g, jbase))};
        if (!term(at({0, 0}, g, jbase + 1)).equals(base.mono_mul(one(), rho.a, rho.b)))
            fail(errc::internal, "ray series not geometric at the predicted index");
        return sum + base.geometric_close(rho, 0);
    }

    // Closed inner series: sum over j >= jlo of term(f + l W + j A), where A
    // is the tie generator.  Moving by A raises both orders by lcm(d, m), so
    // the series is geometric from its very first term.
    ZetaRat inner(LPoint f, LPoint W, long l, LPoint A, long jlo, QPow rhoA) {
        LPoint start = at(at(f, W, l), A, jlo);
        ZetaRat t0 = term(start);
        if (!term(at(start, A, 1)).equals(t0.mono_mul(one(), rhoA.a, rhoA.b)))
            fail(errc::internal, "tie series not geometric from its first term");
        return t0.geometric_close(rhoA, 0);
    }

    // Sum over a 2-generator vertex cone.  Exactly one generator ties the two
    // orders (d A0 = m A1); the branch indicator along the other generator is
    // D0 + l sW, so its sign is pinned for l > |D0| and the closed inner sums
    // become geometric in l from there.
    ZetaRat vertex(const Cone& c) {
        int ai = d_ * c.gens[0][0] == m_ * c.gens[0][1]   ? 0
                 : d_ * c.gens[1][0] == m_ * c.gens[1][1] ? 1
                                                          : -1;
        if (ai < 0) fail(errc::internal, "vertex cone without a tie generator");
        LPoint A = c.gens[ai], W = c.gens[1 - ai];
        long sW = d_ * W[0] - m_ * W[1];
        if (sW == 0) fail(errc::internal, "vertex cone with two tie generators");
        QPow rhoA{A[0] + A[1], d_ / std::gcd(d_, m_) * m_};
        ZetaRat sum = ZetaRat::zero(F_->q());
        for (const LPoint& f : c.fund) {
            long lo = f[0] == 0 && f[1] == 0 ? 1 : 0;
            long D0 = d_ * f[0] - m_ * f[1] - e0_;
            long lbase = std::max(lo, std::abs(D0) + 1);
            for (long l = lo; l < lbase; ++l) sum += inner(f, W, l, A, lo, rhoA);
            ZetaRat base = inner(f, W, lbase, A, lo, rhoA);
            LPoint p0 = at(at(f, W, lbase), A, lo);
            LPoint p1 = at(at(f, W, lbase + 1), A, lo);
            QPow rhoW{W[0] + W[1], e_of(p1) - e_of(p0)};
            if (!inner(f, W, lbase + 1, A, lo, rhoA)
                     .equals(base.mono_mul(one(), rhoW.a, rhoW.b)))
                fail(errc::internal, "transverse series not geometric at the predicted index");
            sum += base.geometric_close(rhoW, 0);
        }
        return sum;
    }
};

using Measure = std::pair<long, long>;

// Termination measure of the cluster recursion: the number of distinct roots
// and, below it, the largest pairwise contact order.
Measure cluster_measure(const ClusterForm& st) {
    long contact = 0;
    for (size_t i = 0; i < st.roots.size(); ++i)
        for (size_t j = i + 1; j < st.roots.size(); ++j) {
            LocalNum diff = st.roots[i].first - st.roots[j].first;
            if (diff.is_zero()) fail(errc::invalid, "repeated root");
            contact = std::max(contact, static_cast<long>(*diff.ord()));
        }
    return {static_cast<long>(st.roots.size()), contact};
}

// After recentring on an n-fold root, everything except the leading x^n and
// the y^m term must sit strictly above the binomial in both x-degree and
// order; that is what makes the closed form of the pure binomial exact for
// the whole integrand, coset by coset.
void check_perturbation(const BivarPoly& g, const LocalNum& lead, long n,
                        const LocalNum& ycoef, long m) {
    for (const auto& [ij, coef] : g.terms()) {
        auto [i, j] = ij;
        if (i == static_cast<int>(n) && j == 0) {
            if (coef != lead) fail(errc::internal, "recentred leading coefficient mismatch");
        } else if (i == 0 && j == static_cast<int>(m)) {
            if (coef != ycoef) fail(errc::internal, "recentred y coefficient mismatch");
        } else if (j != 0 || i <= static_cast<int>(n) || *coef.ord() < 1) {
            fail(errc::internal, "recentred form is not a perturbed binomial");
        }
    }
}

ZetaRat solve_cluster(const ClusterForm& st, const Character& chi,
                      const std::optional<Measure>& parent);

// The peeled form has a unit x-side scalar; dispatch on the root count.
ZetaRat cluster_core(const ClusterForm& form, const Character& chi) {
    const Fq* F = form.b.field();
    long q = F->q();
    size_t k = form.roots.size();

    // No root, or a simple root: the reduction has no singular zero (the
    // factored part reduces to a nonzero constant times at most one power of
    // x, so one of the partials survives at every zero), and one expansion
    // step is exact.
    if (k == 0 || (k == 1 && form.roots[0].second == 1))
        return terminal_spf(form.expand(), ResidueDomain::full2(), chi);

    if (k == 1) {
        auto [gamma, n] = form.roots[0];
        // Recentre on the root: x -> x + gamma turns the factored part into
        // B(x) x^n with B unit-valued on O, a perturbed binomial in x.
        ClusterForm tr = form;
        tr.roots[0].first = LocalNum::zero(F);
        for (TailFactor& t : tr.tails) t.c = t.c - gamma.shifted(t.u);
        LocalNum lead = tr.b;
        for (const TailFactor& t : tr.tails) lead *= (-t.c).pow(t.mult);
        check_perturbation(tr.expand(), lead, n, form.ycoef, form.m);
        return binomial_zeta(lead, n, form.ycoef, form.m, chi);
    }

    // Two or more roots: split x over its residue classes.  Classes free of
    // roots finish in one exact step; a class holding roots recurses on the
    // rescaled cluster, with the out-of-class roots demoted to unit factors.
    Measure mine = cluster_measure(form);
    ZetaRat Z = ZetaRat::zero(q);
    for (unsigned r = 0; r < static_cast<unsigned>(q); ++r) {
        LocalNum rep = LocalNum::from_fq(F, r);
        std::vector<size_t> in;
        for (size_t i = 0; i < k; ++i)
            if (form.roots[i].first.residue() == r) in.push_back(i);
        if (in.empty()) {
            BivarPoly g = form.expand().subst_affine(rep, LocalNum::pi_pow(F, 1),
                                                     LocalNum::zero(F),
                                                     LocalNum::from_fq(F, 1));
            Z += terminal_spf(g, ResidueDomain::full2(), chi).mono_mul(one(), 1, 0);
            continue;
        }
        ClusterForm sub;
        sub.ycoef = form.ycoef;
        sub.m = form.m;
        long ncl = 0;
        for (size_t i : in) ncl += form.roots[i].second;
        sub.b = form.b.shifted(static_cast<int>(ncl));
        for (const TailFactor& t : form.tails)
            sub.tails.push_back({t.u + 1, t.c - rep.shifted(t.u), t.mult});
        for (size_t i = 0; i < k; ++i) {
            const auto& [gamma, n] = form.roots[i];
            if (std::find(in.begin(), in.end(), i) != in.end())
                sub.roots.push_back({(gamma - rep).shifted(-1), n});
            else
                sub.tails.push_back({1, gamma - rep, n});
        }
        Z += solve_cluster(sub, chi, mine).mono_mul(one(), 1, 0);
    }
    return Z;
}

ZetaRat solve_cluster(const ClusterForm& st, const Character& chi,
                      const std::optional<Measure>& parent) {
    if (parent && !(cluster_measure(st) < *parent))
        fail(errc::internal, "cluster recursion failed to shrink");
    PeeledForm pf = peel_scalar_layers(st, chi);
    return pf.prefix + cluster_core(pf.form, chi).mono_mul(one(), pf.qexp, pf.texp);
}

} // namespace

BivarPoly ClusterForm::expand() const {
    const Fq* F = b.field();
    BivarPoly acc = BivarPoly::constant(F, b);
    for (const TailFactor& t : tails) {
        BivarPoly factor = BivarPoly::monomial(F, 1, 0, LocalNum::pi_pow(F, t.u)) -
                           BivarPoly::constant(F, t.c);
        acc = acc * factor.pow(t.mult);
    }
    for (const auto& [gamma, n] : roots) {
        BivarPoly factor = BivarPoly::monomial(F, 1, 0, LocalNum::from_fq(F, 1)) -
                           BivarPoly::constant(F, gamma);
        acc = acc * factor.pow(n);
    }
    return acc + BivarPoly::monomial(F, 0, static_cast<int>(m), ycoef);
}

PeeledForm peel_scalar_layers(const ClusterForm& st, const Character& chi) {
    if (st.b.is_zero() || st.ycoef.is_zero())
        fail(errc::internal, "scalar peel on a degenerate form");
    long eb = *st.b.ord(), ec = *st.ycoef.ord();
    if (eb < 0 || ec < 0) fail(errc::internal, "scalar peel on a non-integral form");

    PeeledForm out;
    out.prefix = ZetaRat::zero(chi.field()->q());
    out.form = st;
    long e = std::min(eb, ec);
    // A common power of pi scales straight out as T^e (its angular part is 1).
    out.form.b = out.form.b.shifted(-static_cast<int>(e));
    out.form.ycoef = out.form.ycoef.shifted(-static_cast<int>(e));
    out.texp = e;
    // If the y-coefficient leads, the x-side still hides under pi^E.  On
    // y-units the integrand reduces to a nonzero constant times y^m, so that
    // slab is one exact step; on y in pi O expand y into pi y and pull the
    // emerging common power of pi out again.  Each pass eats min(E, m) of E.
    long E = eb - ec;
    while (E > 0) {
        ZetaRat v = terminal_spf(out.form.expand(), full_by_units(), chi);
        out.prefix += v.mono_mul(one(), out.qexp, out.texp);
        long kk = std::min(E, out.form.m);
        out.qexp += 1;
        out.texp += kk;
        out.form.b = out.form.b.shifted(-static_cast<int>(kk));
        out.form.ycoef = out.form.ycoef.shifted(static_cast<int>(out.form.m - kk));
        E -= kk;
    }
    return out;
}

ZetaRat cluster_zeta(const ClusterForm& st, const Character& chi) {
    const Fq* F = chi.field();
    if (!st.b.field() || st.b.field() != F || st.ycoef.field() != F)
        fail(errc::invalid, "form and character fields disagree");
    if (st.b.is_zero()) fail(errc::hypothesis, "x-side scalar must be nonzero");
    if (st.ycoef.is_zero()) fail(errc::hypothesis, "y-coefficient must be nonzero");
    if (!st.b.is_integral() || !st.ycoef.is_integral())
        fail(errc::hypothesis, "scalars must be integral");
    if (st.m < 2) fail(errc::hypothesis, "y-exponent must be at least 2");
    if (st.m % F->p() == 0)
        fail(errc::hypothesis, "y-exponent divisible by the residue characteristic");
    for (const TailFactor& t : st.tails)
        if (t.u < 1 || t.mult < 1 || t.c.field() != F || !t.c.is_unit())
            fail(errc::invalid, "malformed unit factor");
    for (const auto& [gamma, n] : st.roots)
        if (n < 1 || gamma.field() != F || !gamma.is_integral())
            fail(errc::invalid, "malformed root");
    cluster_measure(st); // rejects repeated roots
    return solve_cluster(st, chi, std::nullopt);
}

ZetaRat binomial_zeta(const LocalNum& mu1, long d, const LocalNum& mu2, long m,
                      const Character& chi) {
    const Fq* F = chi.field();
    if (mu1.field() != F || mu2.field() != F)
        fail(errc::invalid, "coefficient and character fields disagree");
    if (d < 1) fail(errc::invalid, "x-exponent must be at least 1");
    if (m < 2) fail(errc::hypothesis, "y-exponent must be at least 2");
    if (!mu1.is_unit()) fail(errc::hypothesis, "x-coefficient must be a unit");
    if (mu2.is_zero() || !mu2.is_integral())
        fail(errc::hypothesis, "y-coefficient must be nonzero and integral");
    if (!binomial_nondegenerate(d, m, F->p()))
        fail(errc::hypothesis, "y-exponent divisible by the residue characteristic");
    if (d == 1) {
        // The x-partial of the reduction is the unit mu1, so no zero is
        // singular and a single expansion step is exact.
        BivarPoly h = BivarPoly::monomial(F, 1, 0, mu1) +
                      BivarPoly::monomial(F, 0, static_cast<int>(m), mu2);
        return terminal_spf(h, ResidueDomain::full2(), chi);
    }
    return BinomialEngine(mu1, d, mu2, m, chi).run();
}

ZetaRat perturbed_binomial_zeta(const BivarPoly& h, const Character& chi) {
    const Fq* F = chi.field();
    if (h.field() != F) fail(errc::invalid, "polynomial and character fields disagree");
    if (h.is_zero()) fail(errc::hypothesis, "zero integrand");
    if (!h.is_integral()) fail(errc::hypothesis, "coefficients must be integral");

    long d = -1, m = -1;
    LocalNum mu1, mu2;
    for (const auto& [ij, coef] : h.terms()) {
        auto [i, j] = ij;
        if (i > 0 && j > 0) fail(errc::hypothesis, "mixed x y term outside the family");
        if (i == 0 && j == 0) fail(errc::hypothesis, "constant term outside the family");
        if (j > 0) {
            if (m >= 0) fail(errc::hypothesis, "more than one y term");
            m = j;
            mu2 = coef;
        } else if (d < 0) {
            d = i; // terms() ascends, so the first pure-x term has least degree
            mu1 = coef;
        }
    }
    if (m < 2) fail(errc::hypothesis, "y term must have exponent at least 2");
    if (m % F->p() == 0)
        fail(errc::hypothesis, "y-exponent divisible by the residue characteristic");
    if (d < 0) fail(errc::hypothesis, "no x term");
    if (!mu1.is_unit()) fail(errc::hypothesis, "least x term must have a unit coefficient");
    // The leading coefficient must be the plain lift of its residue: pi times
    // anything at the leading degree belongs to the perturbation, which is
    // required to start strictly above it.
    if (mu1 != LocalNum::from_fq(F, mu1.residue()))
        fail(errc::hypothesis, "pi-content at the least x exponent outside the family");
    for (const auto& [ij, coef] : h.terms()) {
        auto [i, j] = ij;
        if (j > 0 || i == static_cast<int>(d)) continue;
        if (*coef.ord() < 1) fail(errc::hypothesis, "second unit x term outside the family");
    }

    // On every coset pi^{a1} O^x x pi^{a2} O^x the perturbation sits at order
    // at least 1 + (d+1) a1, strictly above the minimal order min(d a1, ...),
    // so it never changes the reduction that the coset value depends on: the
    // answer equals that of the bare binomial.
    if (d >= 2) return binomial_zeta(mu1, d, mu2, m, chi);
    // d = 1: the x-partial of the reduction is the unit mu1, one exact step.
    return terminal_spf(h, ResidueDomain::full2(), chi);
}

ZetaRat superelliptic_zeta(const FactoredCurve& curve, const Character& chi) {
    const Fq* F = chi.field();
    if (curve.gamma0.field() != F)
        fail(errc::invalid, "curve and character fields disagree");
    expand_validate(curve);

    ClusterForm st;
    st.b = -curve.gamma0;
    st.ycoef = LocalNum::from_fq(F, 1);
    st.m = curve.m;
    for (const auto& [gamma, n] : curve.roots) {
        if (gamma.is_integral()) {
            st.roots.push_back({gamma, n});
        } else {
            // A root below the integers never lets the factor vanish on O:
            // x - gamma = pi^{-u} (pi^u x - c) with c = pi^u gamma a unit, so
            // the pole moves into the scalar and a unit factor remains.
            int u = -*gamma.ord();
            st.tails.push_back({u, gamma.shifted(u), n});
            st.b = st.b.shifted(-u * static_cast<int>(n));
        }
    }
    if (!st.b.is_integral())
        fail(errc::internal, "absorbed scalar escaped the integers");
    return cluster_zeta(st, chi);
}

} // namespace igusa
