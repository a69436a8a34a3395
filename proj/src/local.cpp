#include "local.hpp"

#include <algorithm>

namespace igusa {

namespace {
const Fq* common_field(const LocalNum& a, const LocalNum& b) {
    const Fq* F = a.field() ? a.field() : b.field();
    if (a.field() && b.field() && a.field() != b.field())
        fail(errc::internal, "LocalNum: mixed coefficient fields");
    if (!F) fail(errc::internal, "LocalNum: operation on field-less zeros");
    return F;
}
} // namespace

void LocalNum::normalize() {
    std::sort(t_.begin(), t_.end());
    size_t w = 0;
    for (size_t i = 0; i < t_.size();) {
        int e = t_[i].first;
        unsigned acc = 0;
        while (i < t_.size() && t_[i].first == e) {
            acc = F_->add(acc, t_[i].second);
            ++i;
        }
        if (acc != 0) t_[w++] = {e, acc};
    }
    t_.resize(w);
}

LocalNum LocalNum::from_fq(const Fq* F, unsigned a, int exp) {
    LocalNum x(F);
    if (a != 0) x.t_.push_back({exp, a});
    return x;
}

LocalNum LocalNum::from_int(const Fq* F, long n) { return from_fq(F, F->from_int(n)); }

LocalNum LocalNum::from_terms(const Fq* F, std::vector<std::pair<int, unsigned>> terms) {
    LocalNum x(F);
    x.t_ = std::move(terms);
    x.normalize();
    return x;
}

std::optional<int> LocalNum::ord() const {
    if (t_.empty()) return std::nullopt;
    return t_.front().first;
}

LocalNum LocalNum::ac() const {
    if (t_.empty()) fail(errc::invalid, "ac of zero is undefined");
    return shifted(-t_.front().first);
}

LocalNum LocalNum::shifted(int e) const {
    LocalNum x = *this;
    for (auto& tm : x.t_) tm.first += e;
    return x;
}

LocalNum LocalNum::operator+(const LocalNum& o) const {
    const Fq* F = common_field(*this, o);
    LocalNum x(F);
    x.t_ = t_;
    x.t_.insert(x.t_.end(), o.t_.begin(), o.t_.end());
    x.normalize();
    return x;
}

LocalNum LocalNum::operator-() const {
    LocalNum x = *this;
    for (auto& tm : x.t_) tm.second = F_->neg(tm.second);
    return x;
}

LocalNum LocalNum::operator-(const LocalNum& o) const { return *this + (-o); }

LocalNum LocalNum::operator*(const LocalNum& o) const {
    const Fq* F = common_field(*this, o);
    LocalNum x(F);
    x.t_.reserve(t_.size() * o.t_.size());
    for (const auto& a : t_)
        for (const auto& b : o.t_)
            x.t_.push_back({a.first + b.first, F->mul(a.second, b.second)});
    x.normalize();
    return x;
}

LocalNum LocalNum::pow(long e) const {
    if (e < 0) fail(errc::internal, "LocalNum::pow: negative exponent");
    if (!F_) fail(errc::internal, "LocalNum::pow on field-less zero");
    LocalNum r = from_fq(F_, 1);
    LocalNum b = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        b = b * b;
    }
    return r;
}

unsigned LocalNum::coeff(int e) const {
    for (const auto& tm : t_)
        if (tm.first == e) return tm.second;
    return 0;
}

unsigned LocalNum::residue() const {
    if (!is_integral()) fail(errc::invalid, "residue of a non-integral element");
    return coeff(0);
}

std::vector<unsigned> LocalNum::digits(long c) const {
    if (!is_integral()) fail(errc::invalid, "digits of a non-integral element");
    std::vector<unsigned> d(c, 0);
    for (const auto& tm : t_)
        if (tm.first < c) d[tm.first] = tm.second;
    return d;
}

long LocalNum::residue_key(long c) const {
    std::vector<unsigned> d = digits(c);
    long key = 0;
    for (long i = c - 1; i >= 0; --i) key = key * F_->q() + d[i];
    return key;
}

LocalNum LocalNum::truncated(long c) const {
    if (!is_integral()) fail(errc::invalid, "truncation of a non-integral element");
    LocalNum x(F_);
    for (const auto& tm : t_)
        if (tm.first < c) x.t_.push_back(tm);
    return x;
}

std::string LocalNum::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& tm : t_) {
        if (!out.empty()) out += " + ";
        std::string coef = F_->show(tm.second);
        if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
        bool coef_trivial = tm.second == 1;
        if (tm.first == 0) {
            out += coef;
        } else {
            if (!coef_trivial) out += coef + "*";
            out += tm.first == 1 ? "t" : "t^" + std::to_string(tm.first);
        }
    }
    return out;
}

} // namespace igusa
