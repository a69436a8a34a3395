#include "zeta.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

namespace igusa {

namespace {

using DensePoly = std::vector<CycloNum>;

DensePoly to_dense(const std::map<long, CycloNum>& m) {
    if (m.empty()) return {};
    DensePoly v(static_cast<size_t>(m.rbegin()->first) + 1);
    for (const auto& [b, c] : m) v[static_cast<size_t>(b)] = c;
    return v;
}

std::map<long, CycloNum> to_map(const DensePoly& v) {
    std::map<long, CycloNum> m;
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) m[static_cast<long>(j)] = v[j];
    return m;
}

// P(T) * (1 - r T^b), dense.
DensePoly mul_one_factor(const DensePoly& p, const Rat& r, long b) {
    if (p.empty()) return {};
    DensePoly out(p.size() + static_cast<size_t>(b));
    for (size_t j = 0; j < p.size(); ++j) {
        out[j] += p[j];
        out[j + static_cast<size_t>(b)] -= p[j].scaled(r);
    }
    return out;
}

} // namespace

ZetaRat ZetaRat::scalar(long q, const CycloNum& c) {
    ZetaRat z(q);
    z.put(0, c);
    return z;
}

ZetaRat ZetaRat::monomial(long q, const CycloNum& c, long a, long b) {
    ZetaRat z(q);
    z.put(b, c.scaled(rat_qpow(q, -a)));
    return z;
}

bool ZetaRat::is_zero() const { return num_.empty(); }

void ZetaRat::put(long b, const CycloNum& c) {
    if (b < 0) fail(errc::internal, "ZetaRat: negative T power");
    auto it = num_.find(b);
    if (it == num_.end()) {
        if (!c.is_zero()) num_.emplace(b, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) num_.erase(it);
}

void ZetaRat::check_compat(const ZetaRat& x, const ZetaRat& y) {
    if (x.q_ == 0 || y.q_ == 0 || x.q_ != y.q_)
        fail(errc::internal, "ZetaRat: mixing incompatible q");
}

bool ZetaRat::try_cancel(QPow f) {
    if (num_.empty()) return false;
    long degP = num_.rbegin()->first;
    if (f.b > degP) return false;
    DensePoly p = to_dense(num_);
    Rat r = rat_qpow(q_, -f.a);
    // Ascending division: Q_j = P_j + r Q_{j-b}; exact iff the top b slots of
    // Q vanish.
    DensePoly quot(p.size());
    for (long j = 0; j <= degP; ++j) {
        CycloNum v = p[static_cast<size_t>(j)];
        if (j >= f.b) v += quot[static_cast<size_t>(j - f.b)].scaled(r);
        quot[static_cast<size_t>(j)] = v;
    }
    for (long j = degP - f.b + 1; j <= degP; ++j)
        if (!quot[static_cast<size_t>(j)].is_zero()) return false;
    quot.resize(static_cast<size_t>(degP - f.b + 1));
    num_ = to_map(quot);
    return true;
}

void ZetaRat::canonicalize() {
    if (num_.empty()) { // exact zero: drop every factor
        den_.clear();
        return;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end();) {
            while (it->second > 0 && try_cancel(it->first)) {
                --it->second;
                changed = true;
            }
            if (it->second == 0) it = den_.erase(it);
            else ++it;
        }
    }
}

std::map<long, CycloNum> ZetaRat::lifted_num(const std::map<QPow, long>& target) const {
    DensePoly p = to_dense(num_);
    for (const auto& [f, mult] : target) {
        long have = 0;
        auto it = den_.find(f);
        if (it != den_.end()) have = it->second;
        if (have > mult) fail(errc::internal, "ZetaRat: denominator does not divide the target");
        for (long i = have; i < mult; ++i) p = mul_one_factor(p, rat_qpow(q_, -f.a), f.b);
    }
    return to_map(p);
}

ZetaRat ZetaRat::operator+(const ZetaRat& o) const {
    if (q_ == 0) { // additive identity for accumulation loops
        ZetaRat r = o;
        return r;
    }
    if (o.q_ == 0) return *this;
    check_compat(*this, o);
    std::map<QPow, long> target = den_;
    for (const auto& [f, m] : o.den_) {
        long& t = target[f];
        t = std::max(t, m);
    }
    ZetaRat r(q_);
    r.den_ = target;
    r.num_ = lifted_num(target);
    for (const auto& [b, c] : o.lifted_num(target)) r.put(b, c);
    r.raw_den_ = raw_den_;
    r.merge_raw(o.raw_den_);
    r.canonicalize();
    return r;
}

ZetaRat ZetaRat::operator-(const ZetaRat& o) const {
    return *this + o.mono_mul(CycloNum::rational(Rat(-1)), 0, 0);
}

ZetaRat ZetaRat::operator*(const ZetaRat& o) const {
    check_compat(*this, o);
    ZetaRat r(q_);
    for (const auto& [b1, c1] : num_)
        for (const auto& [b2, c2] : o.num_) r.put(b1 + b2, c1 * c2);
    r.den_ = den_;
    for (const auto& [f, m] : o.den_) r.den_[f] += m;
    r.raw_den_ = raw_den_;
    for (const auto& [f, m] : o.raw_den_) r.raw_den_[f] += m;
    r.canonicalize();
    return r;
}

ZetaRat ZetaRat::mono_mul(const CycloNum& c, long a, long b) const {
    ZetaRat r(q_);
    CycloNum s = c.scaled(rat_qpow(q_, -a));
    for (const auto& [b0, c0] : num_) r.put(b0 + b, c0 * s);
    r.den_ = den_;
    r.raw_den_ = raw_den_;
    r.canonicalize();
    return r;
}

ZetaRat ZetaRat::geometric_close(QPow rho, long j0) const {
    if (rho.a < 1) fail(errc::internal, "geometric ratio must have a >= 1");
    if (j0 < 0) fail(errc::internal, "geometric start must be >= 0");
    if (rho.b == 0) {
        // Pure q-power ratio: the closed sum is the rational scalar
        // q^{-a j0} / (1 - q^{-a}).
        Rat s = rat_qpow(q_, -rho.a * j0) / (Rat(1) - rat_qpow(q_, -rho.a));
        s.canonicalize();
        ZetaRat r = mono_mul(CycloNum::rational(s), 0, 0);
        return r;
    }
    ZetaRat r = mono_mul(CycloNum::rational(Rat(1)), rho.a * j0, rho.b * j0);
    r.den_[rho] += 1;
    r.raw_den_[rho] += 1;
    r.canonicalize();
    return r;
}

bool ZetaRat::equals(const ZetaRat& o) const {
    check_compat(*this, o);
    // Cross multiplication: num_x * den_y == num_y * den_x.
    DensePoly a = to_dense(num_);
    for (const auto& [f, m] : o.den_)
        for (long i = 0; i < m; ++i) a = mul_one_factor(a, rat_qpow(q_, -f.a), f.b);
    DensePoly b = to_dense(o.num_);
    for (const auto& [f, m] : den_)
        for (long i = 0; i < m; ++i) b = mul_one_factor(b, rat_qpow(q_, -f.a), f.b);
    return to_map(a) == to_map(b);
}

std::vector<CycloNum> ZetaRat::series(long order) const {
    if (order < 0) fail(errc::invalid, "series order must be >= 0");
    std::vector<CycloNum> s(static_cast<size_t>(order) + 1);
    for (const auto& [b, c] : num_)
        if (b <= order) s[static_cast<size_t>(b)] = c;
    // Multiply by each geometric factor in place: ascending j makes the update
    // s_j += r s_{j-b} realize 1/(1 - q^{-a} T^b).
    for (const auto& [f, m] : den_) {
        Rat r = rat_qpow(q_, -f.a);
        for (long i = 0; i < m; ++i)
            for (long j = f.b; j <= order; ++j)
                s[static_cast<size_t>(j)] += s[static_cast<size_t>(j - f.b)].scaled(r);
    }
    return s;
}

CycloNum ZetaRat::eval_at(const Rat& t0) const {
    CycloNum nv;
    for (const auto& [b, c] : num_) nv += c.scaled(rat_pow(t0, b));
    Rat dv(1);
    for (const auto& [f, m] : den_) {
        Rat fac = Rat(1) - rat_qpow(q_, -f.a) * rat_pow(t0, f.b);
        fac.canonicalize();
        if (fac == 0) fail(errc::invalid, "evaluation at a pole of the representation");
        dv *= rat_pow(fac, m);
    }
    Rat inv(dv.get_den(), dv.get_num());
    inv.canonicalize();
    return nv.scaled(inv);
}

std::vector<Rat> ZetaRat::pole_real_parts() const {
    std::set<Rat> seen;
    for (const auto& [f, m] : den_) {
        Rat s(-f.a, f.b);
        s.canonicalize();
        seen.insert(s);
    }
    return {seen.rbegin(), seen.rend()};
}

void ZetaRat::merge_raw(const std::map<QPow, long>& other) {
    for (const auto& [f, m] : other) {
        long& t = raw_den_[f];
        t = std::max(t, m);
    }
}

void ZetaRat::note_raw_factor(QPow f, long mult) { raw_den_[f] += mult; }

namespace {

// Smallest a >= 0 such that q^a c has coefficient denominators coprime to p
// (q = p^k); emission splits each numerator coefficient as q^{-a} * integral
// part so that q-power content is explicit in the serialized form.
long qpow_content(const CycloNum& c, long p, long k) {
    long maxv = 0;
    for (const Rat& r : c.coeffs()) {
        if (r == 0) continue;
        Int den = r.get_den();
        mpz_class tmp;
        long v = static_cast<long>(
            mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), Int(p).get_mpz_t()));
        maxv = std::max(maxv, v);
    }
    return (maxv + k - 1) / k;
}

void factor_prime(long q, long& p, long& k) {
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            k = 0;
            long v = q;
            while (v > 1) {
                if (v % d != 0) fail(errc::internal, "q is not a prime power");
                v /= d;
                ++k;
            }
            return;
        }
    p = q;
    k = 1;
}

std::vector<std::pair<long, long>> factor_list(const std::map<QPow, long>& den) {
    std::vector<std::pair<long, long>> out; // (a, b) repeated per multiplicity
    for (const auto& [f, m] : den)
        for (long i = 0; i < m; ++i) out.push_back({f.a, f.b});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::pair(x.second, x.first) < std::pair(y.second, y.first);
    });
    return out;
}

} // namespace

std::string ZetaRat::json() const {
    nlohmann::ordered_json j;
    j["q"] = q_;
    long N = 1;
    for (const auto& [b, c] : num_) N = lcm_long(N, c.order());
    j["coeff_order"] = N;
    long p = 0, k = 0;
    factor_prime(q_, p, k);
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [b, c] : num_) { // map order = ascending b = lex (b, a)
        CycloNum ce = c.embedded(N);
        long a = qpow_content(ce, p, k);
        CycloNum scaled = ce.scaled(rat_qpow(q_, a));
        auto coeffs = nlohmann::ordered_json::array();
        for (const Rat& r : scaled.coeffs()) coeffs.push_back(rat_str(r));
        terms.push_back(nlohmann::ordered_json::array({coeffs, a, b}));
    }
    j["numerator"] = terms;
    auto den = nlohmann::ordered_json::array();
    for (const auto& [a, b] : factor_list(den_))
        den.push_back(nlohmann::ordered_json::array({a, b}));
    j["denominator"] = den;
    auto raw = nlohmann::ordered_json::array();
    for (const auto& [a, b] : factor_list(raw_den_))
        raw.push_back(nlohmann::ordered_json::array({a, b}));
    j["raw_denominator"] = raw;
    return j.dump();
}

ZetaRat ZetaRat::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::parse, std::string("zeta json: ") + e.what());
    }
    try {
        ZetaRat z(j.at("q").get<long>());
        if (z.q_ < 2) fail(errc::parse, "zeta json: bad q");
        long N = j.at("coeff_order").get<long>();
        for (const auto& t : j.at("numerator")) {
            std::vector<Rat> coeffs;
            for (const auto& s : t.at(0)) coeffs.push_back(rat_parse(s.get<std::string>()));
            long a = t.at(1).get<long>();
            long b = t.at(2).get<long>();
            z.put(b, CycloNum::from_coeffs(N, coeffs).scaled(rat_qpow(z.q_, -a)));
        }
        for (const auto& f : j.at("denominator")) {
            QPow d{f.at(0).get<long>(), f.at(1).get<long>()};
            if (d.a < 1 || d.b < 1) fail(errc::parse, "zeta json: bad denominator factor");
            z.den_[d] += 1;
        }
        for (const auto& f : j.at("raw_denominator"))
            z.raw_den_[{f.at(0).get<long>(), f.at(1).get<long>()}] += 1;
        return z;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("zeta json: ") + e.what());
    }
}

std::string ZetaRat::latex() const {
    std::ostringstream out;
    if (num_.empty()) return "0";
    std::ostringstream numtex;
    long p = 0, k = 0;
    factor_prime(q_, p, k);
    bool first = true;
    for (const auto& [b, c] : num_) {
        long a = qpow_content(c, p, k);
        CycloNum scaled = c.scaled(rat_qpow(q_, a));
        std::string cs = scaled.str();
        bool needs_parens = cs.find('+') != std::string::npos || cs.find(' ') != std::string::npos;
        if (!needs_parens && !cs.empty() && cs[0] == '-') {
            numtex << (first ? "-" : " - ");
            cs = cs.substr(1);
        } else if (!first) {
            numtex << " + ";
        }
        first = false;
        bool unit_coeff = (cs == "1") && (a > 0 || b > 0);
        if (!unit_coeff) numtex << (needs_parens ? "\\left(" + cs + "\\right)" : cs);
        if (a > 0) numtex << "q^{-" << a << "}";
        if (b > 0) {
            numtex << "T";
            if (b > 1) numtex << "^{" << b << "}";
        }
        if (unit_coeff && a == 0 && b == 0) numtex << "1";
    }
    if (den_.empty()) return numtex.str();
    out << "\\frac{" << numtex.str() << "}{";
    for (const auto& [f, m] : den_) {
        out << "\\left(1 - q^{-" << f.a << "}T";
        if (f.b > 1) out << "^{" << f.b << "}";
        out << "\\right)";
        if (m > 1) out << "^{" << m << "}";
    }
    out << "}";
    return out.str();
}

} // namespace igusa
