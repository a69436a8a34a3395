#pragma once

#include "character.hpp"
#include "poly.hpp"
#include "zeta.hpp"

namespace igusa {

inline constexpr long long kDefaultBudget = 100000000; // max residue pairs per count

// Exact solution counts N_e = #{(x, y) mod pi^e : g = 0 mod pi^e}, N_0 = 1.
struct CountProfile {
    long e_max = 0;
    std::vector<long long> counts; // indices 0..e_max
};

// Exhaustive count over the q^{2e} residue pairs; refuses when that exceeds
// the budget.
long long count_mod(const BivarPoly& g, long e, long long budget = kDefaultBudget);
CountProfile count_profile(const BivarPoly& g, long e_max, long long budget = kDefaultBudget);

// The classical generating-function consistency check for trivial characters:
// with P(t) = sum_e N_e q^{-2e} t^e, the solver output must satisfy
// P(t) = (1 - t Z(t)) / (1 - t).  Since N_0 = 1, this is equivalent to the
// coefficientwise identity z_e = N_e q^{-2e} - N_{e+1} q^{-2e-2} for
// e < e_max, which is what gets compared (exactly); a failure reports the
// first differing series coefficient of Z.
struct PoincareReport {
    bool pass = true;
    long first_mismatch = -1;
    std::string detail; // expected vs got at the mismatch
};
PoincareReport poincare_check(const ZetaRat& Z, const CountProfile& profile);

// Truncated integral with certified error: classifies residues mod pi^e by
// k = ord g; classes with k <= e - 1 - c_chi are exactly chi(ac g) t0^k times
// the class mass, and the undetermined rest contribute their total mass to
// the tail bound (the integrand has absolute value at most 1).  Guarantees
// |Z(t0) - value| <= tail_bound for 0 < t0 < 1.
struct TruncatedIntegral {
    CycloNum value;
    Rat tail_bound;
};
TruncatedIntegral truncated_integral(const BivarPoly& g, const Character& chi, long e,
                                     const Rat& t0, long long budget = kDefaultBudget);

// Reference power-series evaluation of Z_g(s, chi, O^2) to the given order by
// direct recursive expansion: one expansion step, then recursion into each
// residual with its pi-content peeled off (every level gains at least one
// power of T, so the recursion depth is bounded by the order).  Independent
// of the closed-form solver.
std::vector<CycloNum> series_by_expansion(const BivarPoly& g, const Character& chi, long order);

} // namespace igusa
