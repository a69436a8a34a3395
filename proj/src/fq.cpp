#include "fq.hpp"

#include <algorithm>
#include <numeric>

namespace igusa {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense polynomials over F_p, lowest degree first, used only at table-build time.
using Poly = std::vector<long>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, long p) {
    trim(a);
    long dm = static_cast<long>(m.size()) - 1;
    long lead_inv = 0;
    for (long t = 1; t < p; ++t)
        if (t * m[dm] % p == 1) { lead_inv = t; break; }
    while (static_cast<long>(a.size()) - 1 >= dm && !a.empty()) {
        long da = static_cast<long>(a.size()) - 1;
        long f = a[da] * lead_inv % p;
        for (long i = 0; i <= dm; ++i) {
            long& c = a[da - dm + i];
            c = ((c - f * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

bool irreducible(const Poly& m, long p) {
    long k = static_cast<long>(m.size()) - 1;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (long d = 1; 2 * d <= k; ++d) {
        long count = 1;
        for (long i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly div(d + 1, 0);
            long c = code;
            for (long i = 0; i < d; ++i) { div[i] = c % p; c /= p; }
            div[d] = 1;
            if (poly_mod(m, div, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Fq::Fq(long p, long k, std::vector<long> modulus) : p_(p), k_(k) {
    if (!is_prime(p)) fail(errc::invalid, "Fq: p = " + std::to_string(p) + " is not prime");
    if (k < 1) fail(errc::invalid, "Fq: k must be >= 1");
    q_ = 1;
    for (long i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > 4096) fail(errc::invalid, "Fq: q exceeds the table-arithmetic cap (4096)");
    }

    for (long& c : modulus) c = ((c % p) + p) % p;
    if (k == 1) {
        if (!modulus.empty())
            fail(errc::invalid, "Fq: modulus is only meaningful for k > 1");
    } else {
        if (static_cast<long>(modulus.size()) != k + 1)
            fail(errc::invalid, "Fq: modulus must have k+1 coefficients (degree k)");
        if (modulus[k] != 1)
            fail(errc::invalid, "Fq: modulus must be monic");
        if (!irreducible(modulus, p))
            fail(errc::invalid, "Fq: modulus is reducible over F_p");
    }

    const long q = q_;
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    neg_.assign(q, 0);

    auto decode = [&](unsigned a) {
        Poly c(k, 0);
        long v = a;
        for (long i = 0; i < k; ++i) { c[i] = v % p; v /= p; }
        return c;
    };
    auto encode = [&](const Poly& c) {
        long v = 0;
        for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
        return static_cast<unsigned>(v);
    };

    for (long a = 0; a < q; ++a) {
        Poly ca = decode(a);
        Poly na(k, 0);
        for (long i = 0; i < k; ++i) na[i] = (p - ca[i]) % p;
        neg_[a] = encode(na);
        for (long b = 0; b < q; ++b) {
            Poly cb = decode(b), s(k, 0);
            for (long i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
            add_[a * q + b] = encode(s);
            Poly prod = (k == 1) ? Poly{ca[0] * cb[0] % p} : poly_mulmod(ca, cb, modulus, p);
            prod.resize(k, 0);
            mul_[a * q + b] = encode(prod);
        }
    }

    inv_.assign(q, 0);
    for (long a = 1; a < q; ++a)
        for (long b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) { inv_[a] = static_cast<unsigned>(b); break; }

    // Fixed generator: smallest index of full order q-1.
    auto fq_pow = [&](unsigned a, long e) {
        unsigned r = 1, b = a;
        for (long t = e; t > 0; t >>= 1) {
            if (t & 1) r = mul_[r * q + b];
            b = mul_[b * q + b];
        }
        return r;
    };
    std::vector<long> pf = prime_factors(q - 1);
    gen_ = 0;
    for (long a = 1; a < q && gen_ == 0; ++a) {
        bool full = q - 1 == 1 || std::all_of(pf.begin(), pf.end(), [&](long l) {
            return fq_pow(static_cast<unsigned>(a), (q - 1) / l) != 1u;
        });
        if (full) gen_ = static_cast<unsigned>(a);
    }
    if (gen_ == 0) fail(errc::internal, "Fq: no generator found");

    ind_.assign(q, -1);
    unsigned cur = 1;
    for (long e = 0; e < q - 1; ++e) {
        ind_[cur] = e;
        cur = mul_[cur * q + gen_];
    }
}

unsigned Fq::inv(unsigned a) const {
    if (a == 0) fail(errc::invalid, "Fq: inverse of zero");
    return inv_[a];
}

unsigned Fq::pow(unsigned a, long e) const {
    if (a == 0) {
        if (e < 0) fail(errc::invalid, "Fq: zero to a negative power");
        return e == 0 ? 1u : 0u;
    }
    long r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    unsigned out = 1, b = a;
    for (long t = r; t > 0; t >>= 1) {
        if (t & 1) out = mul(out, b);
        b = mul(b, b);
    }
    return out;
}

unsigned Fq::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<unsigned>(r);
}

long Fq::ind(unsigned a) const {
    if (a == 0) fail(errc::invalid, "Fq: discrete log of zero");
    return ind_[a];
}

std::vector<long> Fq::coords(unsigned a) const {
    std::vector<long> c(k_, 0);
    long v = a;
    for (long i = 0; i < k_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
}

std::string Fq::show(unsigned a) const {
    if (k_ == 1) return std::to_string(a);
    std::vector<long> c = coords(a);
    std::string s;
    for (long i = 0; i < k_; ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) s += std::to_string(c[i]);
        else {
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += i == 1 ? "w" : "w^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace igusa
