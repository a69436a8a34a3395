#pragma once

#include <vector>

#include "rational.hpp"

namespace igusa {

// The N-th cyclotomic polynomial, integer coefficients ascending.
const std::vector<Int>& cyclotomic_poly(long N);

// Exact element of Q(zeta_N), stored against the power basis
// 1, z, ..., z^(phi(N)-1) after reduction mod Phi_N.  That representation is
// unique, so componentwise comparison is canonical equality.  Mixed-order
// arithmetic coerces both operands into Q(zeta_lcm) via z_N = z_L^(L/N).
class CycloNum {
public:
    CycloNum() : N_(1), c_(1, Rat(0)) {}
    static CycloNum rational(const Rat& r);
    static CycloNum root_of_unity(long N, long j); // zeta_N^j
    // Coefficients against the power basis of Q(zeta_N); reduced mod Phi_N.
    static CycloNum from_coeffs(long N, std::vector<Rat> coeffs);

    long order() const { return N_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rational() const; // throws unless is_rational()

    CycloNum embedded(long L) const; // image in Q(zeta_L), N | L

    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator-() const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
    CycloNum scaled(const Rat& r) const;
    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    // Sum of coefficient absolute values: an upper bound for the archimedean
    // absolute value under any embedding (|z| = 1 on the basis), and the exact
    // value of |.| for rational elements.
    Rat abs_upper_bound() const;

    std::string str() const; // human-readable, e.g. "1/2 + 3 z^2"

private:
    long N_;
    std::vector<Rat> c_; // length phi(N)
    void reduce(std::vector<Rat>& raw) const;
};

long euler_phi(long N);
long lcm_long(long a, long b);

} // namespace igusa
