#include "parse.hpp"

#include <cctype>
#include <memory>

#include "error.hpp"
#include "rational.hpp"

namespace igusa {

namespace {

[[noreturn]] void perr(size_t pos, const std::string& msg) {
    fail(errc::parse, msg + " at offset " + std::to_string(pos));
}

struct Token {
    enum Kind { Integer, Sym, Op, End } kind;
    size_t pos;
    Int n;    // Integer
    char ch;  // Sym ('x','y','t') or Op
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Integer, i, Int(s.substr(i, j - i)), 0});
            i = j;
            continue;
        }
        if (c == 'x' || c == 'y' || c == 't') {
            out.push_back({Token::Sym, i, Int(0), c});
            ++i;
            continue;
        }
        if (std::string("+-*^()").find(c) != std::string::npos) {
            out.push_back({Token::Op, i, Int(0), c});
            ++i;
            continue;
        }
        perr(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::End, s.size(), Int(0), 0});
    return out;
}

struct PExpr;

struct PFactor {
    enum Kind { Integer, Sym, Group } kind;
    size_t pos;
    Int n;
    char sym = 0;
    long exp = 1;
    std::shared_ptr<PExpr> group;
};

struct PTerm {
    int sign = 1;
    size_t pos = 0;
    std::vector<PFactor> factors;
};

struct PExpr {
    std::vector<PTerm> terms;
};

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(lex(s)) {}

    PExpr expr() {
        PExpr e;
        int sign = 1;
        if (is_op('+') || is_op('-')) {
            if (cur().ch == '-') sign = -1;
            ++i_;
        }
        e.terms.push_back(term(sign));
        while (is_op('+') || is_op('-')) {
            int s = cur().ch == '-' ? -1 : 1;
            ++i_;
            e.terms.push_back(term(s));
        }
        return e;
    }

    void expect_end() {
        if (cur().kind != Token::End) perr(cur().pos, "trailing input");
    }

private:
    std::vector<Token> toks_;
    size_t i_ = 0;

    const Token& cur() const { return toks_[i_]; }
    bool is_op(char c) const { return cur().kind == Token::Op && cur().ch == c; }
    bool starts_factor() const {
        return cur().kind == Token::Integer || cur().kind == Token::Sym || is_op('(');
    }

    long exponent() {
        // optional '^' [-] INT
        if (!is_op('^')) return 1;
        ++i_;
        long sign = 1;
        if (is_op('-')) { sign = -1; ++i_; }
        if (cur().kind != Token::Integer) perr(cur().pos, "expected an integer exponent");
        if (cur().n > 1000000) perr(cur().pos, "exponent too large");
        long e = sign * cur().n.get_si();
        ++i_;
        return e;
    }

    PTerm term(int sign) {
        PTerm t;
        t.sign = sign;
        t.pos = cur().pos;
        if (!starts_factor()) perr(cur().pos, "expected a term");
        while (starts_factor()) {
            t.factors.push_back(factor());
            if (is_op('*')) ++i_; // '*' is optional between factors
        }
        return t;
    }

    PFactor factor() {
        PFactor f;
        f.pos = cur().pos;
        if (cur().kind == Token::Integer) {
            f.kind = PFactor::Integer;
            f.n = cur().n;
            ++i_;
            return f;
        }
        if (cur().kind == Token::Sym) {
            f.kind = PFactor::Sym;
            f.sym = cur().ch;
            ++i_;
            f.exp = exponent();
            if (f.sym != 't' && f.exp < 0) perr(f.pos, "negative exponent on a variable");
            return f;
        }
        if (is_op('(')) {
            ++i_;
            f.kind = PFactor::Group;
            f.group = std::make_shared<PExpr>(expr());
            if (!is_op(')')) perr(cur().pos, "expected ')'");
            ++i_;
            f.exp = exponent();
            if (f.exp < 0) perr(f.pos, "negative exponent on a group");
            return f;
        }
        perr(cur().pos, "expected a factor");
    }
};

LocalNum fq_of_int(const Fq* F, const Int& n) {
    unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(F->p()));
    return LocalNum::from_fq(F, static_cast<unsigned>(r));
}

BivarPoly to_bivar(const PExpr& e, const Fq* F);

BivarPoly term_to_bivar(const PTerm& t, const Fq* F) {
    LocalNum coef = LocalNum::from_int(F, t.sign);
    int dx = 0, dy = 0;
    std::vector<BivarPoly> groups;
    for (const PFactor& f : t.factors) {
        switch (f.kind) {
            case PFactor::Integer: coef *= fq_of_int(F, f.n); break;
            case PFactor::Sym:
                if (f.sym == 'x') dx += static_cast<int>(f.exp);
                else if (f.sym == 'y') dy += static_cast<int>(f.exp);
                else coef = coef.shifted(static_cast<int>(f.exp));
                break;
            case PFactor::Group: groups.push_back(to_bivar(*f.group, F).pow(f.exp)); break;
        }
    }
    BivarPoly p = BivarPoly::monomial(F, dx, dy, coef);
    for (const BivarPoly& g : groups) p = p * g;
    return p;
}

BivarPoly to_bivar(const PExpr& e, const Fq* F) {
    BivarPoly p(F);
    for (const PTerm& t : e.terms) p = p + term_to_bivar(t, F);
    return p;
}

std::optional<LocalNum> expr_to_klit(const PExpr& e, const Fq* F);

// The K-literal value of a term that uses no variables; nullopt otherwise.
std::optional<LocalNum> term_to_klit(const PTerm& t, const Fq* F) {
    LocalNum v = LocalNum::from_int(F, t.sign);
    for (const PFactor& f : t.factors) {
        if (f.kind == PFactor::Integer) v *= fq_of_int(F, f.n);
        else if (f.kind == PFactor::Sym && f.sym == 't') v = v.shifted(static_cast<int>(f.exp));
        else if (f.kind == PFactor::Group) {
            auto gv = expr_to_klit(*f.group, F);
            if (!gv) return std::nullopt;
            v *= gv->pow(f.exp);
        } else return std::nullopt;
    }
    return v;
}

std::optional<LocalNum> expr_to_klit(const PExpr& e, const Fq* F) {
    LocalNum v = LocalNum::zero(F);
    for (const PTerm& t : e.terms) {
        auto tv = term_to_klit(t, F);
        if (!tv) return std::nullopt;
        v += *tv;
    }
    return v;
}

// Matches a group against the shape x - gamma (coefficient of x exactly 1),
// returning gamma.
std::optional<LocalNum> group_as_root(const PExpr& e, const Fq* F) {
    LocalNum gamma = LocalNum::zero(F);
    bool seen_x = false;
    for (const PTerm& t : e.terms) {
        bool has_x = false;
        for (const PFactor& f : t.factors)
            if (f.kind == PFactor::Sym && f.sym == 'x') has_x = true;
        if (has_x) {
            if (seen_x || t.sign != 1 || t.factors.size() != 1) return std::nullopt;
            const PFactor& f = t.factors[0];
            if (f.kind != PFactor::Sym || f.sym != 'x' || f.exp != 1) return std::nullopt;
            seen_x = true;
        } else {
            auto tv = term_to_klit(t, F);
            if (!tv) return std::nullopt;
            gamma = gamma - *tv;
        }
    }
    if (!seen_x) return std::nullopt;
    return gamma;
}

void add_root(FactoredCurve& c, const LocalNum& gamma, long n) {
    for (auto& [g, mult] : c.roots)
        if (g == gamma) { mult += n; return; }
    c.roots.push_back({gamma, n});
}

std::optional<FactoredCurve> match_curve(const PExpr& e, const Fq* F) {
    if (e.terms.size() != 2) return std::nullopt;
    // Identify the y^m term: sign +1, a single factor y^m.
    int yi = -1;
    for (int i = 0; i < 2; ++i) {
        const PTerm& t = e.terms[i];
        if (t.sign == 1 && t.factors.size() == 1 && t.factors[0].kind == PFactor::Sym &&
            t.factors[0].sym == 'y') {
            yi = i;
            break;
        }
    }
    if (yi < 0) return std::nullopt;
    FactoredCurve c;
    c.m = e.terms[yi].factors[0].exp;
    if (c.m < 2) return std::nullopt;
    const PTerm& ft = e.terms[1 - yi];
    if (ft.sign != -1) return std::nullopt;
    c.gamma0 = LocalNum::from_fq(F, 1);
    for (const PFactor& f : ft.factors) {
        switch (f.kind) {
            case PFactor::Integer: c.gamma0 *= fq_of_int(F, f.n); break;
            case PFactor::Sym:
                if (f.sym == 'x') add_root(c, LocalNum::zero(F), f.exp);
                else if (f.sym == 't') c.gamma0 = c.gamma0.shifted(static_cast<int>(f.exp));
                else return std::nullopt; // y inside the x-part
                break;
            case PFactor::Group: {
                auto gamma = group_as_root(*f.group, F);
                if (!gamma) return std::nullopt;
                add_root(c, *gamma, f.exp);
                break;
            }
        }
    }
    if (c.roots.empty()) return std::nullopt;
    return c;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(errc::parse, "expected an integer for " + what + ", got '" + s + "'");
    }
}

} // namespace

BivarPoly parse_bivar(const std::string& src, const Fq* F) {
    Parser p(src);
    PExpr e = p.expr();
    p.expect_end();
    return to_bivar(e, F);
}

LocalNum parse_klit(const std::string& src, const Fq* F) {
    Parser p(src);
    PExpr e = p.expr();
    p.expect_end();
    auto v = expr_to_klit(e, F);
    if (!v) fail(errc::parse, "expected a coefficient in t only: '" + src + "'");
    return *v;
}

std::optional<FactoredCurve> parse_curve_expr(const std::string& src, const Fq* F) {
    Parser p(src);
    PExpr e = p.expr();
    p.expect_end();
    return match_curve(e, F);
}

FactoredCurve parse_curve_block(const std::string& src, const Fq* F, long m_from_flag) {
    FactoredCurve c;
    bool have_gamma0 = false, have_roots = false;
    long m_block = 0;
    size_t start = 0;
    std::string body = src;
    // Accept an optional curve{...} wrapper.
    std::string t = strip(body);
    if (t.rfind("curve{", 0) == 0 && t.back() == '}') body = t.substr(6, t.size() - 7);

    while (start <= body.size()) {
        size_t end = body.find(';', start);
        std::string piece = strip(body.substr(start, end == std::string::npos ? std::string::npos
                                                                              : end - start));
        start = end == std::string::npos ? body.size() + 1 : end + 1;
        if (piece.empty()) continue;
        size_t eq = piece.find('=');
        if (eq == std::string::npos) fail(errc::parse, "curve block entry missing '=': '" + piece + "'");
        std::string key = strip(piece.substr(0, eq));
        std::string val = strip(piece.substr(eq + 1));
        if (key == "gamma0") {
            if (have_gamma0) fail(errc::parse, "curve block: duplicate gamma0");
            c.gamma0 = parse_klit(val, F);
            have_gamma0 = true;
        } else if (key == "m") {
            if (m_block != 0) fail(errc::parse, "curve block: duplicate m");
            m_block = parse_long(val, "m");
        } else if (key == "roots") {
            if (have_roots) fail(errc::parse, "curve block: duplicate roots");
            have_roots = true;
            std::string list = strip(val);
            if (list.size() < 2 || list.front() != '[' || list.back() != ']')
                fail(errc::parse, "curve block: roots must be a [...] list");
            list = list.substr(1, list.size() - 2);
            // Split on top-level "),(" boundaries.
            size_t i = 0;
            while (i < list.size()) {
                while (i < list.size() && (std::isspace(static_cast<unsigned char>(list[i])) || list[i] == ','))
                    ++i;
                if (i >= list.size()) break;
                if (list[i] != '(') fail(errc::parse, "curve block: expected '(' in roots list");
                size_t close = list.find(')', i);
                if (close == std::string::npos) fail(errc::parse, "curve block: unclosed root pair");
                std::string pair = list.substr(i + 1, close - i - 1);
                i = close + 1;
                size_t comma = pair.rfind(',');
                if (comma == std::string::npos)
                    fail(errc::parse, "curve block: root pair must be (value, multiplicity)");
                LocalNum gamma = parse_klit(strip(pair.substr(0, comma)), F);
                long n = parse_long(strip(pair.substr(comma + 1)), "root multiplicity");
                c.roots.push_back({gamma, n});
            }
        } else {
            fail(errc::parse, "curve block: unknown key '" + key + "'");
        }
    }
    if (!have_gamma0) fail(errc::parse, "curve block: missing gamma0");
    if (!have_roots || c.roots.empty()) fail(errc::parse, "curve block: missing roots");
    if (m_block != 0 && m_from_flag != 0 && m_block != m_from_flag)
        fail(errc::invalid, "curve block m disagrees with the m flag");
    c.m = m_block != 0 ? m_block : m_from_flag;
    if (c.m == 0) fail(errc::invalid, "m is required (flag or curve block key)");
    return c;
}

} // namespace igusa
