#include "igusa/igusa.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "character.hpp"
#include "error.hpp"
#include "fq.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "solver.hpp"
#include "zeta.hpp"

using nlohmann::json;

struct igusa_session {
    std::shared_ptr<igusa::Fq> F;
    igusa::Character chi;
    long long budget;
};

// Results carry everything the oracles need and share ownership of the
// field, so they stay usable after the session is gone.
struct igusa_result {
    std::shared_ptr<const igusa::Fq> F;
    igusa::Character chi;
    igusa::BivarPoly integrand;
    igusa::ZetaRat Z;
    const char* route;
    long long budget;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

igusa_status map_errc(igusa::errc k) {
    switch (k) {
        case igusa::errc::invalid: return IGUSA_EINVAL;
        case igusa::errc::hypothesis: return IGUSA_EHYPOTHESIS;
        case igusa::errc::parse: return IGUSA_EPARSE;
        case igusa::errc::budget: return IGUSA_EBUDGET;
        case igusa::errc::internal: return IGUSA_EINTERNAL;
    }
    return IGUSA_EINTERNAL;
}

template <class Fn>
igusa_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return IGUSA_OK;
    } catch (const igusa::error& e) {
        g_last_error = e.what();
        return map_errc(e.kind);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return IGUSA_EINTERNAL;
    }
}

igusa_status null_arg() {
    g_last_error = "null argument";
    return IGUSA_EINVAL;
}

igusa::Rat parse_rational(const std::string& text) {
    try {
        igusa::Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        igusa::fail(igusa::errc::parse, "not a rational: '" + text + "'");
    }
}

} // namespace

extern "C" {

igusa_session* igusa_session_new(long p, long k, const long* modulus, size_t modulus_len) {
    try {
        std::vector<long> mod;
        if (modulus && modulus_len > 0) mod.assign(modulus, modulus + modulus_len);
        auto F = std::make_shared<igusa::Fq>(p, k, std::move(mod));
        auto chi = igusa::Character::trivial(F.get());
        g_last_error.clear();
        return new igusa_session{std::move(F), std::move(chi), igusa::kDefaultBudget};
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

void igusa_session_free(igusa_session* s) { delete s; }

igusa_status igusa_session_set_character_trivial(igusa_session* s) {
    if (!s) return null_arg();
    return guarded([&] { s->chi = igusa::Character::trivial(s->F.get()); });
}

igusa_status igusa_session_set_character_mult(igusa_session* s, long N, long e) {
    if (!s) return null_arg();
    return guarded([&] { s->chi = igusa::Character::mult(s->F.get(), N, e); });
}

igusa_status igusa_session_set_character_table(igusa_session* s, long N, long c,
                                               const long* keys, const long* exps,
                                               size_t n) {
    if (!s || !keys || !exps) return null_arg();
    return guarded([&] {
        std::map<long, long> values;
        for (size_t i = 0; i < n; ++i) {
            if (!values.emplace(keys[i], exps[i]).second)
                igusa::fail(igusa::errc::invalid, "duplicate table key");
        }
        s->chi = igusa::Character::table(s->F.get(), N, c, values);
    });
}

igusa_status igusa_session_set_budget(igusa_session* s, long long budget) {
    if (!s) return null_arg();
    if (budget <= 0) {
        g_last_error = "budget must be positive";
        return IGUSA_EINVAL;
    }
    s->budget = budget;
    g_last_error.clear();
    return IGUSA_OK;
}

igusa_status igusa_compute_poly(igusa_session* s, const char* expr, const char* mode,
                                igusa_result** out) {
    if (!s || !expr || !mode || !out) return null_arg();
    *out = nullptr;
    return guarded([&] {
        const std::string m(mode);
        if (m != "theorem11" && m != "theorem12" && m != "auto")
            igusa::fail(igusa::errc::invalid, "unknown mode '" + m + "'");
        const igusa::Fq* F = s->F.get();
        std::optional<igusa::FactoredCurve> curve;
        if (m != "theorem11") curve = igusa::parse_curve_expr(expr, F);
        if (m == "theorem12" && !curve)
            igusa::fail(igusa::errc::hypothesis,
                        "expression is not a factored curve y^m - c*(x-r1)^n1*...");
        if (curve) {
            igusa::BivarPoly g = igusa::expand_validate(*curve);
            igusa::ZetaRat Z = igusa::superelliptic_zeta(*curve, s->chi);
            *out = new igusa_result{s->F, s->chi, std::move(g), std::move(Z),
                                    "theorem12", s->budget};
        } else {
            igusa::BivarPoly h = igusa::parse_bivar(expr, F);
            igusa::ZetaRat Z = igusa::perturbed_binomial_zeta(h, s->chi);
            *out = new igusa_result{s->F, s->chi, std::move(h), std::move(Z),
                                    "theorem11", s->budget};
        }
    });
}

igusa_status igusa_compute_curve(igusa_session* s, const char* block, long m_hint,
                                 igusa_result** out) {
    if (!s || !block || !out) return null_arg();
    *out = nullptr;
    return guarded([&] {
        igusa::FactoredCurve curve = igusa::parse_curve_block(block, s->F.get(), m_hint);
        igusa::BivarPoly g = igusa::expand_validate(curve);
        igusa::ZetaRat Z = igusa::superelliptic_zeta(curve, s->chi);
        *out = new igusa_result{s->F, s->chi, std::move(g), std::move(Z),
                                "theorem12", s->budget};
    });
}

void igusa_result_free(igusa_result* r) { delete r; }

char* igusa_result_json(const igusa_result* r) {
    if (!r) return nullptr;
    return dup_string(r->Z.json());
}

char* igusa_result_latex(const igusa_result* r) {
    if (!r) return nullptr;
    return dup_string(r->Z.latex());
}

char* igusa_result_series_json(const igusa_result* r, long order) {
    if (!r) return nullptr;
    if (order < 0) {
        g_last_error = "series order must be nonnegative";
        return nullptr;
    }
    try {
        json arr = json::array();
        for (const auto& c : r->Z.series(order)) arr.push_back(c.str());
        g_last_error.clear();
        return dup_string(arr.dump());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

char* igusa_result_poles_json(const igusa_result* r) {
    if (!r) return nullptr;
    try {
        json arr = json::array();
        for (const auto& s : r->Z.pole_real_parts()) arr.push_back(s.get_str());
        g_last_error.clear();
        return dup_string(arr.dump());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

const char* igusa_result_route(const igusa_result* r) {
    return r ? r->route : nullptr;
}

igusa_status igusa_result_oracle_json(const igusa_result* r, long depth,
                                      const char* t0, char** report) {
    if (!r || !report) return null_arg();
    *report = nullptr;
    if (depth < 1) {
        g_last_error = "oracle depth must be positive";
        return IGUSA_EINVAL;
    }
    return guarded([&] {
        json rep;
        rep["depth"] = depth;
        rep["checks"] = json::array();
        bool all = true;

        auto ref = igusa::series_by_expansion(r->integrand, r->chi, depth);
        auto got = r->Z.series(depth);
        long first = -1;
        for (long i = 0; i <= depth; ++i) {
            if (!(ref[i] == got[i])) {
                first = i;
                break;
            }
        }
        json js;
        js["kind"] = "series";
        js["order"] = depth;
        js["pass"] = first < 0;
        if (first >= 0) {
            js["first_mismatch"] = first;
            js["expected"] = ref[first].str();
            js["got"] = got[first].str();
        }
        rep["checks"].push_back(js);
        all = all && first < 0;

        if (r->chi.is_trivial()) {
            auto prof = igusa::count_profile(r->integrand, depth, r->budget);
            auto pc = igusa::poincare_check(r->Z, prof);
            json jp;
            jp["kind"] = "poincare";
            jp["depth"] = depth;
            jp["counts"] = prof.counts;
            jp["pass"] = pc.pass;
            if (!pc.pass) {
                jp["first_mismatch"] = pc.first_mismatch;
                jp["detail"] = pc.detail;
            }
            rep["checks"].push_back(jp);
            all = all && pc.pass;
        } else {
            igusa::Rat t(1, 2);
            if (t0) t = parse_rational(t0);
            if (!(t > 0 && t < 1))
                igusa::fail(igusa::errc::invalid, "t0 must lie in (0,1)");
            auto ti = igusa::truncated_integral(r->integrand, r->chi, depth, t, r->budget);
            igusa::CycloNum at = r->Z.eval_at(t);
            igusa::CycloNum diff = at - ti.value;
            json jt;
            jt["kind"] = "certificate";
            jt["t0"] = t.get_str();
            jt["zeta_at_t0"] = at.str();
            jt["truncated"] = ti.value.str();
            jt["tail_bound"] = ti.tail_bound.get_str();
            if (diff.is_rational()) {
                igusa::Rat d = diff.to_rational();
                if (d < 0) d = -d;
                bool ok = d <= ti.tail_bound;
                jt["pass"] = ok;
                all = all && ok;
            } else if (diff.abs_upper_bound() <= ti.tail_bound) {
                jt["pass"] = true;
            } else {
                // the coarse bound cannot settle it; leave the check open
                jt["pass"] = nullptr;
            }
            rep["checks"].push_back(jt);
        }

        rep["pass"] = all;
        *report = dup_string(rep.dump());
    });
}

void igusa_string_free(char* s) { std::free(s); }

const char* igusa_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
