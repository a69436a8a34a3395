#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace igusa {

// Arithmetic context for the finite field F_q, q = p^k.
//
// Elements are dense indices 0..q-1: the element sum c_i w^i (w = class of x in
// F_p[x]/(modulus), coefficients c_i in F_p) has index sum c_i p^i.  For k = 1
// the index is the element itself.  All operations are table lookups built once
// at construction, which keeps residue enumeration loops branch-free.
//
// A generator of F_q^x is fixed deterministically (smallest index whose order
// is q-1) so that discrete logs, and therefore character values, are
// reproducible across runs.
class Fq {
public:
    // modulus: coefficients c_0..c_k of a monic irreducible degree-k polynomial
    // over F_p, ascending.  Must be empty when k == 1.
    Fq(long p, long k, std::vector<long> modulus = {});

    long p() const { return p_; }
    long k() const { return k_; }
    long q() const { return q_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned inv(unsigned a) const;
    unsigned pow(unsigned a, long e) const;

    // Canonical image of an integer in the prime subfield.
    unsigned from_int(long n) const;

    unsigned gen() const { return gen_; }
    // Discrete log base gen(); a must be nonzero.
    long ind(unsigned a) const;

    std::vector<long> coords(unsigned a) const; // base-p digits, length k
    std::string show(unsigned a) const;

private:
    long p_, k_, q_;
    std::vector<unsigned> add_, mul_, neg_, inv_;
    std::vector<long> ind_;
    unsigned gen_ = 0;
};

} // namespace igusa
