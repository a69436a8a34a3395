#include "character.hpp"

namespace igusa {

namespace {

LocalNum key_to_local(const Fq* F, long key, long c) {
    std::vector<std::pair<int, unsigned>> terms;
    for (long i = 0; i < c; ++i) {
        unsigned d = static_cast<unsigned>(key % F->q());
        key /= F->q();
        if (d != 0) terms.push_back({static_cast<int>(i), d});
    }
    return LocalNum::from_terms(F, std::move(terms));
}

long unit_key_count(const Fq* F, long c) {
    long n = F->q() - 1;
    for (long i = 1; i < c; ++i) n *= F->q();
    return n;
}

// Enumerate keys of unit residues mod pi^c.
template <typename Fn>
void for_each_unit_key(const Fq* F, long c, Fn fn) {
    long total = 1;
    for (long i = 0; i < c; ++i) total *= F->q();
    for (long key = 0; key < total; ++key)
        if (key % F->q() != 0) fn(key);
}

} // namespace

Character Character::trivial(const Fq* F) {
    Character ch;
    ch.F_ = F;
    return ch;
}

Character Character::mult(const Fq* F, long N, long e) {
    if (N < 1) fail(errc::invalid, "character order must be >= 1");
    if ((F->q() - 1) % N != 0)
        fail(errc::hypothesis, "character order " + std::to_string(N) + " does not divide q-1 = " +
                                   std::to_string(F->q() - 1));
    e %= N;
    if (e < 0) e += N;
    if (N == 1 || e == 0) return trivial(F);
    Character ch;
    ch.F_ = F;
    ch.kind_ = Kind::mult;
    ch.N_ = N;
    ch.conductor_ = 1;
    ch.mult_e_ = e;
    return ch;
}

Character Character::table(const Fq* F, long N, long c, const std::map<long, long>& values) {
    if (N < 1) fail(errc::invalid, "character order must be >= 1");
    if (c < 1) fail(errc::invalid, "table character conductor must be >= 1");
    if (static_cast<long>(values.size()) != unit_key_count(F, c))
        fail(errc::invalid, "character table must cover exactly the units mod pi^c");
    for (const auto& [key, j] : values) {
        if (key % F->q() == 0) fail(errc::invalid, "character table key is not a unit residue");
        if (j < 0 || j >= N) fail(errc::invalid, "character table exponent out of range [0, N)");
    }
    // Homomorphism, exhaustively on the finite domain.
    for (const auto& [ka, ja] : values) {
        LocalNum a = key_to_local(F, ka, c);
        for (const auto& [kb, jb] : values) {
            LocalNum b = key_to_local(F, kb, c);
            long kab = (a * b).truncated(c).residue_key(c);
            if (values.at(kab) != (ja + jb) % N)
                fail(errc::invalid, "character table is not multiplicative");
        }
    }
    bool all_trivial = true;
    for (const auto& [key, j] : values)
        if (j != 0) { all_trivial = false; break; }
    if (all_trivial) return trivial(F);
    if (c >= 2) {
        // Minimality: must be nontrivial on 1 + pi^(c-1).
        bool deep = false;
        for_each_unit_key(F, c, [&](long key) {
            LocalNum u = key_to_local(F, key, c);
            LocalNum one = LocalNum::from_fq(F, 1);
            if ((u - one).is_zero()) return;
            auto o = (u - one).ord();
            if (o && *o >= c - 1 && values.at(key) != 0) deep = true;
        });
        if (!deep)
            fail(errc::invalid, "character table conductor is not minimal (trivial on 1 + pi^" +
                                    std::to_string(c - 1) + ")");
    }
    Character ch;
    ch.F_ = F;
    ch.kind_ = Kind::table;
    ch.N_ = N;
    ch.conductor_ = c;
    ch.table_ = values;
    return ch;
}

std::string Character::describe() const {
    switch (kind_) {
        case Kind::trivial: return "trivial";
        case Kind::mult: return "mult:" + std::to_string(N_) + ":" + std::to_string(mult_e_);
        case Kind::table:
            return "table:" + std::to_string(N_) + ":conductor" + std::to_string(conductor_);
    }
    return "?";
}

long Character::exponent_at_key(long key) const {
    switch (kind_) {
        case Kind::trivial: return 0;
        case Kind::mult: return mult_e_ * F_->ind(static_cast<unsigned>(key)) % N_;
        case Kind::table: {
            auto it = table_.find(key);
            if (it == table_.end()) fail(errc::internal, "character table miss");
            return it->second;
        }
    }
    return 0;
}

CycloNum Character::eval_unit(const LocalNum& u) const {
    if (u.is_zero()) return CycloNum();
    if (!u.is_unit()) fail(errc::invalid, "character evaluated off the unit group");
    if (kind_ == Kind::trivial) return CycloNum::rational(Rat(1));
    long c = conductor_;
    return CycloNum::root_of_unity(N_, exponent_at_key(u.residue_key(c)));
}

CycloNum Character::eval_ac(const LocalNum& x) const {
    if (x.is_zero()) return CycloNum();
    if (kind_ == Kind::trivial) return CycloNum::rational(Rat(1));
    return eval_unit(x.ac());
}

} // namespace igusa
