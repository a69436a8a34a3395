#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fq.hpp"

namespace igusa {

// An element of F_q((pi)) with finitely many nonzero coefficients, kept exact:
// a sorted list of (exponent, nonzero coefficient index) pairs.  This subring
// is closed under +, -, * and under the shifts the solver needs, so no
// truncation ever happens.  ord(0) is the empty optional, never a large
// integer.
class LocalNum {
public:
    LocalNum() : F_(nullptr) {}
    explicit LocalNum(const Fq* F) : F_(F) {}

    static LocalNum zero(const Fq* F) { return LocalNum(F); }
    static LocalNum from_fq(const Fq* F, unsigned a, int exp = 0);
    static LocalNum from_int(const Fq* F, long n);
    static LocalNum pi_pow(const Fq* F, int e) { return from_fq(F, 1, e); }
    // terms: (exponent, coefficient index); duplicate exponents are summed.
    static LocalNum from_terms(const Fq* F, std::vector<std::pair<int, unsigned>> terms);

    const Fq* field() const { return F_; }
    bool is_zero() const { return t_.empty(); }
    std::optional<int> ord() const;
    bool is_unit() const { return ord() == std::optional<int>(0); }
    bool is_integral() const { return is_zero() || *ord() >= 0; }

    // Angular component: x * pi^(-ord x); a unit.  Rejects zero.
    LocalNum ac() const;
    // Multiplication by pi^e.
    LocalNum shifted(int e) const;

    LocalNum operator+(const LocalNum& o) const;
    LocalNum operator-(const LocalNum& o) const;
    LocalNum operator-() const;
    LocalNum operator*(const LocalNum& o) const;
    LocalNum& operator+=(const LocalNum& o) { return *this = *this + o; }
    LocalNum& operator*=(const LocalNum& o) { return *this = *this * o; }
    LocalNum pow(long e) const; // e >= 0
    bool operator==(const LocalNum& o) const { return t_ == o.t_; }
    bool operator!=(const LocalNum& o) const { return !(*this == o); }

    // Coefficient of pi^e.
    unsigned coeff(int e) const;
    // Residue of an integral element: coefficient of pi^0.
    unsigned residue() const;
    // Digits 0..c-1 of an integral element (truncation mod pi^c).
    std::vector<unsigned> digits(long c) const;
    // digits(c) packed base q, for table keys; requires q^c to fit a long.
    long residue_key(long c) const;
    LocalNum truncated(long c) const; // the element mod pi^c, as a value

    const std::vector<std::pair<int, unsigned>>& terms() const { return t_; }
    std::string str() const; // grammar-compatible, e.g. "2*t^-1 + 1 + 3*t^2"

private:
    const Fq* F_;
    std::vector<std::pair<int, unsigned>> t_;
    void normalize();
};

} // namespace igusa
