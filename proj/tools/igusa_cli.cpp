// Command-line front end for the exact Igusa zeta engine; links the C API
// only.  Results go to stdout, diagnostics and failure reasons to stderr as
// one-line JSON objects.
//
// Exit codes: 0 success, 2 hypothesis or parse failure, 3 budget refusal,
// 1 anything else (usage, invalid configuration, internal errors).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "igusa/igusa.h"

using ojson = nlohmann::ordered_json;

namespace {

struct CStr {
    char* p = nullptr;
    ~CStr() { igusa_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

struct SessionGuard {
    igusa_session* s = nullptr;
    ~SessionGuard() { igusa_session_free(s); }
};

struct ResultGuard {
    igusa_result* r = nullptr;
    ~ResultGuard() { igusa_result_free(r); }
};

void report_error(const std::string& cls, const std::string& message) {
    ojson err;
    err["error"] = cls;
    err["message"] = message;
    std::cerr << err.dump() << "\n";
}

// Maps a failed C-API status to the documented exit code, echoing the
// engine's reason on stderr.
int fail_with(igusa_status st) {
    switch (st) {
        case IGUSA_EHYPOTHESIS: report_error("hypothesis", igusa_last_error()); return 2;
        case IGUSA_EPARSE: report_error("parse", igusa_last_error()); return 2;
        case IGUSA_EBUDGET: report_error("budget", igusa_last_error()); return 3;
        case IGUSA_EINVAL: report_error("invalid", igusa_last_error()); return 1;
        default: report_error("internal", igusa_last_error()); return 1;
    }
}

int usage_error(const std::string& message) {
    report_error("invalid", message);
    return 1;
}

// q = p^k for prime p, or 0 when q is not a prime power.
long factor_prime_power(long q, long& k_out) {
    if (q < 2) return 0;
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) {
        k_out = 1;
        return q;
    }
    long k = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return 0;
    k_out = k;
    return p;
}

bool parse_long(const std::string& s, long& out) {
    try {
        size_t pos = 0;
        out = std::stol(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Igusa local zeta functions for superelliptic curves and perturbed binomials"};
    long q = 0, p = 0, k = 0, m = 0;
    long oracle_depth = 0;
    long long budget = 0;
    std::string modulus_csv, char_spec = "trivial", poly, curve, input_path;
    std::string mode = "auto", emit = "json", t0;

    app.add_option("--q", q, "prime power q = p^k (k >= 2 also needs --modulus)");
    app.add_option("--p", p, "residue characteristic (alternative to --q)");
    app.add_option("--k", k, "extension degree (with --p)");
    app.add_option("--modulus", modulus_csv,
                   "comma-separated modulus coefficients over F_p, constant term first");
    app.add_option("--char", char_spec, "trivial | mult:N:e | table:<path>");
    app.add_option("--m", m, "exponent m for curve inputs");
    app.add_option("--poly", poly, "polynomial expression in x, y and the uniformizer t");
    app.add_option("--curve", curve, "curve block \"gamma0=<lit>; roots=[(<lit>,<n>),...]; m=<m>\"");
    app.add_option("--input", input_path, "file holding an expression or a curve block");
    app.add_option("--mode", mode, "theorem11 | theorem12 | auto")
        ->check(CLI::IsMember({"theorem11", "theorem12", "auto"}));
    app.add_option("--emit", emit, "json | latex | series:E");
    app.add_option("--oracle-depth", oracle_depth, "run the verification oracles to depth E");
    app.add_option("--t0", t0, "rational in (0,1) for the certificate oracle (default 1/2)");
    app.add_option("--budget", budget, "max residue pairs the oracles may enumerate");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // normalize usage failures to the documented code
    }

    // field selection: --q as a prime power, or --p with optional --k
    if (q > 0 && p > 0) return usage_error("give either --q or --p/--k, not both");
    if (q > 0) {
        p = factor_prime_power(q, k);
        if (p == 0) return usage_error("--q must be a prime power");
    } else if (p > 0) {
        if (k == 0) k = 1;
    } else {
        return usage_error("no field: give --q or --p");
    }

    std::vector<long> modulus;
    if (!modulus_csv.empty()) {
        std::stringstream ss(modulus_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            long c = 0;
            if (!parse_long(item, c)) return usage_error("bad --modulus entry '" + item + "'");
            modulus.push_back(c);
        }
    }

    SessionGuard session;
    session.s = igusa_session_new(p, k, modulus.empty() ? nullptr : modulus.data(),
                                  modulus.size());
    if (!session.s) return usage_error(igusa_last_error());

    // character: trivial | mult:N:e | table:<path>
    ojson char_echo;
    if (char_spec == "trivial") {
        char_echo["kind"] = "trivial";
    } else if (char_spec.rfind("mult:", 0) == 0) {
        std::string rest = char_spec.substr(5);
        size_t colon = rest.find(':');
        long N = 0, e = 0;
        if (colon == std::string::npos || !parse_long(rest.substr(0, colon), N) ||
            !parse_long(rest.substr(colon + 1), e))
            return usage_error("bad --char, want mult:N:e");
        if (igusa_status st = igusa_session_set_character_mult(session.s, N, e); st != IGUSA_OK)
            return fail_with(st);
        char_echo["kind"] = "mult";
        char_echo["N"] = N;
        char_echo["e"] = e;
    } else if (char_spec.rfind("table:", 0) == 0) {
        std::string path = char_spec.substr(6);
        std::ifstream in(path);
        if (!in) return usage_error("cannot read character table '" + path + "'");
        long N = 0, c = 0;
        std::vector<long> keys, exps;
        try {
            ojson tab = ojson::parse(in);
            N = tab.at("N").get<long>();
            c = tab.at("conductor").get<long>();
            for (const auto& [key, val] : tab.at("values").items()) {
                long u = 0;
                if (!parse_long(key, u)) throw std::runtime_error("bad key '" + key + "'");
                keys.push_back(u);
                exps.push_back(val.get<long>());
            }
        } catch (const std::exception& e) {
            report_error("parse", std::string("character table: ") + e.what());
            return 2;
        }
        if (igusa_status st = igusa_session_set_character_table(session.s, N, c, keys.data(),
                                                                exps.data(), keys.size());
            st != IGUSA_OK)
            return fail_with(st);
        char_echo["kind"] = "table";
        char_echo["N"] = N;
        char_echo["conductor"] = c;
    } else {
        return usage_error("bad --char, want trivial | mult:N:e | table:<path>");
    }

    if (budget == 0) {
        if (const char* env = std::getenv("IGUSA_BUDGET")) {
            try {
                budget = std::stoll(env);
            } catch (const std::exception&) {
                return usage_error("bad IGUSA_BUDGET value");
            }
        }
    }
    if (budget != 0) {
        if (igusa_status st = igusa_session_set_budget(session.s, budget); st != IGUSA_OK)
            return fail_with(st);
    }

    // input selection: exactly one of --poly, --curve, --input
    int given = (!poly.empty()) + (!curve.empty()) + (!input_path.empty());
    if (given != 1) return usage_error("give exactly one of --poly, --curve, --input");
    bool is_curve = !curve.empty();
    std::string text = is_curve ? curve : poly;
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) return usage_error("cannot read input '" + input_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        size_t start = text.find_first_not_of(" \t\r\n");
        size_t end = text.find_last_not_of(" \t\r\n");
        text = start == std::string::npos ? "" : text.substr(start, end - start + 1);
        is_curve = text.rfind("gamma0", 0) == 0;
    }
    if (!is_curve && m > 0) return usage_error("--m applies to curve inputs only");
    if (is_curve && mode == "theorem11") return usage_error("a curve input cannot run in mode theorem11");

    ResultGuard result;
    igusa_status st = is_curve ? igusa_compute_curve(session.s, text.c_str(), m, &result.r)
                               : igusa_compute_poly(session.s, text.c_str(), mode.c_str(), &result.r);
    if (st != IGUSA_OK) return fail_with(st);

    ojson oracle = nullptr;
    if (oracle_depth > 0) {
        CStr rep;
        st = igusa_result_oracle_json(result.r, oracle_depth, t0.empty() ? nullptr : t0.c_str(),
                                      &rep.p);
        if (st != IGUSA_OK) return fail_with(st);
        oracle = ojson::parse(rep.str());
    }

    if (emit == "json") {
        ojson out;
        out["q"] = q > 0 ? q : [&] {
            long v = 1;
            for (long i = 0; i < k; ++i) v *= p;
            return v;
        }();
        out["character"] = char_echo;
        ojson echo;
        echo["kind"] = is_curve ? "curve" : "poly";
        echo["text"] = text;
        if (!is_curve) echo["mode"] = mode;
        if (is_curve && m > 0) echo["m"] = m;
        echo["route"] = igusa_result_route(result.r);
        out["input_echo"] = echo;
        CStr zeta;
        zeta.p = igusa_result_json(result.r);
        out["zeta"] = ojson::parse(zeta.str());
        CStr poles;
        poles.p = igusa_result_poles_json(result.r);
        out["poles"] = ojson::parse(poles.str());
        out["simplified"] = true;
        out["oracle"] = oracle;
        std::cout << out.dump() << "\n";
    } else if (emit == "latex") {
        CStr tex;
        tex.p = igusa_result_latex(result.r);
        std::cout << tex.str() << "\n";
        if (!oracle.is_null()) std::cerr << oracle.dump() << "\n";
    } else if (emit.rfind("series:", 0) == 0) {
        long order = 0;
        if (!parse_long(emit.substr(7), order) || order < 0)
            return usage_error("bad --emit series:E");
        CStr ser;
        ser.p = igusa_result_series_json(result.r, order);
        if (!ser.p) return usage_error(igusa_last_error());
        std::cout << ser.str() << "\n";
        if (!oracle.is_null()) std::cerr << oracle.dump() << "\n";
    } else {
        return usage_error("bad --emit, want json | latex | series:E");
    }

    if (!oracle.is_null() && oracle.at("pass") != true) {
        report_error("internal", "verification oracle failed; the emitted result is suspect");
        return 1;
    }
    return 0;
}
