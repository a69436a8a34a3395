#include "cyclo.hpp"

#include <map>
#include <numeric>

namespace igusa {

long euler_phi(long N) {
    long r = N;
    for (long d = 2; d * d <= N; ++d) {
        if (N % d == 0) {
            r -= r / d;
            while (N % d == 0) N /= d;
        }
    }
    if (N > 1) r -= r / N;
    return r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

// Exact division of integer polynomials, ascending coefficients; the divisor
// must be monic and divide exactly.
std::vector<Int> int_poly_div(std::vector<Int> num, const std::vector<Int>& den) {
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    std::vector<Int> quot(dn - dd + 1, Int(0));
    for (long i = dn; i >= dd; --i) {
        Int f = num[i];
        quot[i - dd] = f;
        if (f == 0) continue;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
    }
    for (const Int& c : num)
        if (c != 0) fail(errc::internal, "cyclotomic division left a remainder");
    return quot;
}

} // namespace

const std::vector<Int>& cyclotomic_poly(long N) {
    static std::map<long, std::vector<Int>> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    if (N < 1) fail(errc::invalid, "cyclotomic order must be >= 1");
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
    std::vector<Int> num(N + 1, Int(0));
    num[0] = -1;
    num[N] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        num = int_poly_div(std::move(num), cyclotomic_poly(d));
    }
    return cache.emplace(N, std::move(num)).first->second;
}

void CycloNum::reduce(std::vector<Rat>& raw) const {
    const std::vector<Int>& phi = cyclotomic_poly(N_);
    long deg = static_cast<long>(phi.size()) - 1;
    for (long i = static_cast<long>(raw.size()) - 1; i >= deg; --i) {
        Rat f = raw[i];
        if (f == 0) continue;
        raw[i] = 0;
        for (long j = 0; j < deg; ++j) raw[i - deg + j] -= f * Rat(phi[j]);
    }
    raw.resize(deg, Rat(0));
    for (Rat& r : raw) r.canonicalize();
}

CycloNum CycloNum::rational(const Rat& r) {
    CycloNum x;
    x.c_[0] = r;
    x.c_[0].canonicalize();
    return x;
}

CycloNum CycloNum::root_of_unity(long N, long j) {
    if (N < 1) fail(errc::invalid, "root_of_unity: order must be >= 1");
    j %= N;
    if (j < 0) j += N;
    CycloNum x;
    x.N_ = N;
    std::vector<Rat> raw(j + 1, Rat(0));
    raw[j] = 1;
    x.reduce(raw);
    x.c_ = std::move(raw);
    return x;
}

CycloNum CycloNum::from_coeffs(long N, std::vector<Rat> coeffs) {
    CycloNum x;
    x.N_ = N;
    x.reduce(coeffs);
    x.c_ = std::move(coeffs);
    return x;
}

bool CycloNum::is_zero() const {
    for (const Rat& r : c_)
        if (r != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloNum::to_rational() const {
    if (!is_rational()) fail(errc::invalid, "CycloNum: not a rational value: " + str());
    return c_[0];
}

CycloNum CycloNum::embedded(long L) const {
    if (L == N_) return *this;
    if (L % N_ != 0) fail(errc::invalid, "CycloNum: embedding target order not a multiple");
    long step = L / N_;
    CycloNum x;
    x.N_ = L;
    std::vector<Rat> raw((c_.size() - 1) * step + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    x.reduce(raw);
    x.c_ = std::move(raw);
    return x;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    if (N_ != o.N_) {
        long L = lcm_long(N_, o.N_);
        return embedded(L) + o.embedded(L);
    }
    CycloNum x = *this;
    for (size_t i = 0; i < c_.size(); ++i) {
        x.c_[i] += o.c_[i];
        x.c_[i].canonicalize();
    }
    return x;
}

CycloNum CycloNum::operator-() const {
    CycloNum x = *this;
    for (Rat& r : x.c_) r = -r;
    return x;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
    if (N_ != o.N_) {
        long L = lcm_long(N_, o.N_);
        return embedded(L) * o.embedded(L);
    }
    std::vector<Rat> raw(2 * c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    CycloNum x;
    x.N_ = N_;
    x.reduce(raw);
    x.c_ = std::move(raw);
    return x;
}

CycloNum CycloNum::scaled(const Rat& r) const {
    CycloNum x = *this;
    for (Rat& v : x.c_) {
        v *= r;
        v.canonicalize();
    }
    return x;
}

bool CycloNum::operator==(const CycloNum& o) const {
    if (N_ != o.N_) {
        long L = lcm_long(N_, o.N_);
        return embedded(L) == o.embedded(L);
    }
    return c_ == o.c_;
}

Rat CycloNum::abs_upper_bound() const {
    Rat s(0);
    for (const Rat& r : c_) s += rat_abs(r);
    s.canonicalize();
    return s;
}

std::string CycloNum::str() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(c_[i]);
        if (i == 1) out += " z";
        else if (i > 1) out += " z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace igusa
