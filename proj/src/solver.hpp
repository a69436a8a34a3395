#pragma once

#include "character.hpp"
#include "poly.hpp"
#include "zeta.hpp"

namespace igusa {

// A factor (pi^u x - c) with u >= 1 and c a unit: its value is a unit for
// every x in O_K, so it never touches |.|^s, but the angular component still
// sees it and it must be carried exactly.
struct TailFactor {
    int u = 1;
    LocalNum c;
    long mult = 1;
};

// Factored integrand b * prod tails * prod (x - gamma_i)^{n_i} + ycoef * y^m
// over O_K^2.  The roots are integral and pairwise distinct; expand()
// materializes the polynomial when a reduction or enumeration needs it.
struct ClusterForm {
    LocalNum b;
    std::vector<TailFactor> tails;
    std::vector<std::pair<LocalNum, long>> roots;
    LocalNum ycoef;
    long m = 0;

    BivarPoly expand() const;
};

// Scalar-layer normalization: extracts powers of pi until the x-side scalar
// b is a unit, peeling y into pi y as long as the y-term dominates.  The
// input integral equals prefix + q^{-qexp} T^{texp} Z_{form}, and form.b is
// a unit.
struct PeeledForm {
    ZetaRat prefix;
    long qexp = 0;
    long texp = 0;
    ClusterForm form;
};
PeeledForm peel_scalar_layers(const ClusterForm& st, const Character& chi);

// Z of a factored integrand over O_K^2; the general engine entry that the
// curve and binomial wrappers reduce to.  Roots must be integral and distinct
// here (pulling non-integral roots into the scalar is the curve wrapper's
// job); m >= 2 and prime to p.
ZetaRat cluster_zeta(const ClusterForm& st, const Character& chi);

// Z of mu1 x^d + mu2 y^m over O_K^2: one exact expansion step when d <= 1,
// otherwise the cone decomposition of the Newton polygon, each cone series
// summed until its term ratio stabilizes and then closed geometrically.
// Requires mu1 a unit, mu2 nonzero integral, m >= 2 prime to p.
ZetaRat binomial_zeta(const LocalNum& mu1, long d, const LocalNum& mu2, long m,
                      const Character& chi);

// Z of h = mu1 x^d + mu2 y^m + pi h0(x) with mu1 a pi-free unit and
// ldeg(h0) >= d + 1 (validated): the perturbation provably never changes the
// result, so d >= 2 delegates to binomial_zeta on the leading form, while
// d <= 1 is one exact expansion step on h itself.
ZetaRat perturbed_binomial_zeta(const BivarPoly& h, const Character& chi);

// Z of y^m - gamma0 prod (x - gamma_i)^{n_i} over O_K^2 by root clustering:
// residue classes with no root reduce in one exact step, root clusters are
// recentered and recursed, and single roots of multiplicity n >= 2 end in
// binomial_zeta.  The recursion measure (number of roots, maximal pairwise
// contact order) strictly decreases and is asserted at runtime.
ZetaRat superelliptic_zeta(const FactoredCurve& curve, const Character& chi);

} // namespace igusa
