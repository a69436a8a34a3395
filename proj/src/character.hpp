#pragma once

#include <map>
#include <string>

#include "cyclo.hpp"
#include "local.hpp"

namespace igusa {

// A multiplicative character of O_K^x of finite order N, together with its
// conductor c: the smallest c with chi trivial on 1 + pi^c O_K.  Values are
// exact N-th roots of unity in Q(zeta_N).  The convention chi(0) = 0 is
// handled by eval(), never by exceptions.
//
// kinds:
//   trivial    - c = 0; eval is 1 on units.
//   mult       - c = 1; chi(u) = zeta_N^(e * ind(residue of u)), N | q-1.
//   table      - c >= 1; explicit exponent table on units mod pi^c, validated
//                to be a homomorphism with exactly minimal conductor.
class Character {
public:
    static Character trivial(const Fq* F);
    static Character mult(const Fq* F, long N, long e);
    // values: residue_key(c) of a unit mod pi^c -> exponent j of zeta_N^j.
    static Character table(const Fq* F, long N, long c, const std::map<long, long>& values);

    const Fq* field() const { return F_; }
    bool is_trivial() const { return conductor_ == 0; }
    long order() const { return N_; }
    long conductor() const { return conductor_; }
    std::string describe() const;

    // chi(ac of x) for nonzero x; 0 for x = 0.
    CycloNum eval_ac(const LocalNum& x) const;
    // chi(u) for a unit u (by convention 0 when u = 0 and c <= 1).
    CycloNum eval_unit(const LocalNum& u) const;
    // Exponent of zeta_N at a unit residue key mod pi^max(c,1).
    long exponent_at_key(long key) const;

private:
    const Fq* F_ = nullptr;
    long N_ = 1;
    long conductor_ = 0;
    long mult_e_ = 0;
    std::map<long, long> table_;
    enum class Kind { trivial, mult, table } kind_ = Kind::trivial;
};

} // namespace igusa
