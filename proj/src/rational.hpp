#pragma once

#include <gmpxx.h>
#include <string>

#include "error.hpp"

namespace igusa {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, long e) {
    if (e < 0) fail(errc::internal, "int_pow: negative exponent");
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// q^e for possibly negative e, as an exact rational.
inline Rat rat_qpow(long q, long e) {
    Int n = int_pow(Int(q), e < 0 ? -e : e);
    Rat r = e < 0 ? Rat(1, n) : Rat(n, 1);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) fail(errc::invalid, "rat_pow: zero to a negative power");
        Rat inv = Rat(base.get_den(), base.get_num());
        inv.canonicalize();
        return rat_pow(inv, -e);
    }
    Rat r(1);
    Rat b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        b *= b;
    }
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) fail(errc::parse, "not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

} // namespace igusa
