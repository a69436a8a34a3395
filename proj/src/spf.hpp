#pragma once

#include "character.hpp"
#include "poly.hpp"
#include "zeta.hpp"

namespace igusa {

// One coordinate of an integration domain: all of O_K, the units, or a fixed
// residue coset a + pi O_K.  Every such product is a union of cosets of
// (pi O_K)^2, which is what one expansion step requires of its domain.
struct AxisDomain {
    enum Kind { full, units, coset } kind = full;
    unsigned rep = 0; // coset representative (element index), coset kind only

    bool contains(unsigned r) const {
        switch (kind) {
            case full: return true;
            case units: return r != 0;
            case coset: return r == rep;
        }
        return false;
    }
    long residue_count(long q) const {
        return kind == full ? q : kind == units ? q - 1 : 1;
    }
};

struct ResidueDomain {
    AxisDomain x, y;

    static ResidueDomain full2() { return {}; }
    static ResidueDomain units2() {
        return {{AxisDomain::units, 0}, {AxisDomain::units, 0}};
    }
    static ResidueDomain product(AxisDomain xd, AxisDomain yd) { return {xd, yd}; }
    bool contains(unsigned rx, unsigned ry) const { return x.contains(rx) && y.contains(ry); }
    // Haar measure of the domain.
    Rat measure(long q) const {
        Rat m(x.residue_count(q) * y.residue_count(q), q * q);
        m.canonicalize();
        return m;
    }
};

// Points of the reduced domain where the reduction and both partials vanish.
std::vector<std::pair<unsigned, unsigned>> singular_points(const FqBivar& fbar,
                                                           const ResidueDomain& D);

// The two constants of one expansion step.  Trivial chi:
//   v = q^{-2} #{P in D-bar : f-bar(P) != 0},
//   sigma = q^{-2} #{P in D-bar : f-bar(P) = 0, P nonsingular}.
// Nontrivial chi with conductor c:
//   v = q^{-2c} sum over residues P mod pi^c in D with f-bar(P) != 0 of
//       chi(ac f(P)), and sigma = 0.
std::pair<CycloNum, CycloNum> v_sigma(const BivarPoly& f, const ResidueDomain& D,
                                      const Character& chi);

// One expansion step: Z_f(s, chi, D) = rational_part
//   + q^{-2} sum over residuals r of Z_{r.g}(s, chi, O^2), exactly.
struct Residual {
    unsigned px = 0, py = 0; // the singular residue the coset is centered on
    BivarPoly g;             // f(px + pi x, py + pi y), exact
};
struct SPFOutcome {
    ZetaRat rational_part;
    std::vector<Residual> residuals;
};
SPFOutcome spf_step(const BivarPoly& f, const ResidueDomain& D, const Character& chi);

// The expansion step with no residual terms; fails if the singular locus
// meets the domain, since then the step would not be terminal.
ZetaRat terminal_spf(const BivarPoly& f, const ResidueDomain& D, const Character& chi);

// True iff at every point of (F_q^x)^2 at least one of the reduction and its
// two partials is nonzero.  This is the mod-pi detectable form of the index
// condition that makes unit-square values insensitive to pi-multiples.
bool index_zero_on_units(const BivarPoly& r1);

// Z_r(s, chi, (O_K^x)^2) for r = r1 + pi r0: equal to the terminal expansion
// step on the constant lift r1 of the reduction, for every character, provided
// index_zero_on_units(r1).  Fails with a hypothesis error otherwise.
ZetaRat unit_square_zeta(const BivarPoly& r, const Character& chi);

// Z_{alpha f} = chi(ac alpha) q^{-ord(alpha) s} Z_f: the multiplier as
// (coefficient, power of T).  alpha must be nonzero.
std::pair<CycloNum, long> scaling_multiplier(const LocalNum& alpha, const Character& chi);

} // namespace igusa
