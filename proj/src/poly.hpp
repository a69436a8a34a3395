#pragma once

#include <map>

#include "local.hpp"

namespace igusa {

// Bivariate polynomial over F_q (coefficients are element indices).
struct FqBivar {
    const Fq* F = nullptr;
    std::map<std::pair<int, int>, unsigned> c; // (i, j) -> nonzero coefficient

    bool is_zero() const { return c.empty(); }
    unsigned eval(unsigned x, unsigned y) const;
    FqBivar dx() const;
    FqBivar dy() const;
};

// Bivariate polynomial with exact Laurent-series coefficients.  Supports in x
// and y are nonnegative; coefficients may have any order (validity for
// integration is checked separately).
class BivarPoly {
public:
    BivarPoly() : F_(nullptr) {}
    explicit BivarPoly(const Fq* F) : F_(F) {}
    static BivarPoly monomial(const Fq* F, int i, int j, LocalNum coef);
    static BivarPoly constant(const Fq* F, LocalNum coef) { return monomial(F, 0, 0, coef); }

    const Fq* field() const { return F_; }
    const std::map<std::pair<int, int>, LocalNum>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    LocalNum coeff(int i, int j) const;

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly scaled(const LocalNum& s) const;
    BivarPoly pow(long e) const;
    bool operator==(const BivarPoly& o) const { return c_ == o.c_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    LocalNum eval(const LocalNum& x, const LocalNum& y) const;
    // Substitute x -> ax + bx*x, y -> ay + by*y (affine in each variable).
    BivarPoly subst_affine(const LocalNum& ax, const LocalNum& bx, const LocalNum& ay,
                           const LocalNum& by) const;

    // Formal partial derivatives (coefficients multiplied in characteristic p).
    BivarPoly dx() const;
    BivarPoly dy() const;

    bool is_integral() const;
    // Minimal coefficient order; nullopt for the zero polynomial.
    std::optional<int> min_ord() const;
    // Multiplies every coefficient by pi^e (e may be negative).
    BivarPoly coeff_shifted(int e) const;
    // Reduction mod pi; requires integrality.
    FqBivar reduce_mod_pi() const;

    int deg_x() const;
    int deg_y() const;
    std::string str() const;

private:
    const Fq* F_;
    std::map<std::pair<int, int>, LocalNum> c_;
    void put(int i, int j, const LocalNum& v); // adds, drops zeros
};

// A superelliptic input y^m = gamma0 * prod (x - gamma_i)^{n_i}, kept in
// factored form; the integrand is g = y^m - f(x).
struct FactoredCurve {
    LocalNum gamma0;
    std::vector<std::pair<LocalNum, long>> roots; // (gamma_i, n_i), distinct
    long m = 0;
};

// Expands g = y^m - gamma0 prod (x - gamma_i)^{n_i} and validates that the
// expansion is integral.  The cheap necessary condition
//   ord(gamma0) + sum over negative-order roots of n_i ord(gamma_i) >= 0
// is tested first so violations are reported by name; then every expanded
// coefficient is checked.  Also rejects repeated roots and m < 2.
BivarPoly expand_validate(const FactoredCurve& curve);

} // namespace igusa
