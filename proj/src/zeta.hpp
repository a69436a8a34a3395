#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclo.hpp"

namespace igusa {

// A q-power scale: the rational number q^{-a}.  Pairs (a, b) additionally
// stand for the basis monomial q^{-a} T^b throughout this module.
struct QPow {
    long a = 0;
    long b = 0;
    auto operator<=>(const QPow&) const = default;
};

// Exact rational function of T with cyclotomic-number coefficients,
//
//   Z(T) = (sum_b C_b T^b) / prod_{(a,b)} (1 - q^{-a} T^b)^{mult},
//
// where every C_b lies in Q(zeta_N) and q is a fixed prime power.  Powers of
// q^{-1} in the numerator are folded into the rational parts of the C_b, so T
// alone indexes numerator terms.  The denominator factors have a, b >= 1; the
// representation is kept canonical by dividing out factors that divide the
// numerator exactly.
//
// Alongside the canonical denominator, the multiset of factors that the
// computation introduced is tracked (raw_den): simplification may cancel a
// factor that a bound on the denominator shape still wants to see.
class ZetaRat {
public:
    ZetaRat() = default;
    explicit ZetaRat(long q) : q_(q) {}
    static ZetaRat zero(long q) { return ZetaRat(q); }
    static ZetaRat scalar(long q, const CycloNum& c);
    static ZetaRat scalar(long q, const Rat& c) { return scalar(q, CycloNum::rational(c)); }
    // c * q^{-a} T^b.
    static ZetaRat monomial(long q, const CycloNum& c, long a, long b);

    long q() const { return q_; }
    bool is_zero() const;

    ZetaRat operator+(const ZetaRat& o) const;
    ZetaRat operator-(const ZetaRat& o) const;
    ZetaRat& operator+=(const ZetaRat& o) { return *this = *this + o; }
    ZetaRat operator*(const ZetaRat& o) const;
    // Multiply by c * q^{-a} T^b.
    ZetaRat mono_mul(const CycloNum& c, long a, long b) const;
    ZetaRat scaled(const Rat& c) const { return mono_mul(CycloNum::rational(c), 0, 0); }

    // Close a geometric series: sum_{j >= j0} this * rho^j where
    // rho = q^{-a} T^b, i.e. this * rho^{j0} / (1 - rho).  A ratio with b = 0
    // folds to the rational scalar q^{-a j0} / (1 - q^{-a}) instead of adding
    // a denominator factor (which requires b >= 1).  Requires a >= 1 or b >= 1.
    ZetaRat geometric_close(QPow rho, long j0) const;

    // Exact equality as rational functions (cross multiplication).
    bool equals(const ZetaRat& o) const;

    // Power-series coefficients of T^0..T^order; exact.
    std::vector<CycloNum> series(long order) const;
    // Value at T = t0 (rational t0, poles of the representation excluded).
    CycloNum eval_at(const Rat& t0) const;

    // Real parts of the candidate poles: the canonical denominator factor
    // (1 - q^{-a} T^b) contributes s with Re(s) = -a/b.  Sorted descending,
    // deduplicated.
    std::vector<Rat> pole_real_parts() const;

    const std::map<long, CycloNum>& numerator() const { return num_; }
    const std::map<QPow, long>& denominator() const { return den_; }
    const std::map<QPow, long>& raw_denominator() const { return raw_den_; }
    void merge_raw(const std::map<QPow, long>& other);
    void note_raw_factor(QPow f, long mult = 1);

    std::string json() const;  // canonical; byte-identical round trips
    static ZetaRat from_json(const std::string& text);
    std::string latex() const;

private:
    long q_ = 0;
    std::map<long, CycloNum> num_;  // b -> C_b, zero values dropped
    std::map<QPow, long> den_;      // (a, b) -> multiplicity, a,b >= 1
    std::map<QPow, long> raw_den_;  // factors ever introduced (max-merged)

    void put(long b, const CycloNum& c);
    // Divide the numerator by (1 - q^{-a} T^b) if the division is exact.
    bool try_cancel(QPow f);
    void canonicalize();
    static void check_compat(const ZetaRat& x, const ZetaRat& y);
    // Numerator of this viewed over a target denominator that den_ divides.
    std::map<long, CycloNum> lifted_num(const std::map<QPow, long>& target) const;
};

} // namespace igusa
