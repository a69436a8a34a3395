#include "spf.hpp"

namespace igusa {

namespace {

// Constant lift of a reduced polynomial: every coefficient becomes the
// degree-zero expansion of its residue.
BivarPoly constant_lift(const FqBivar& fbar, const Fq* F) {
    BivarPoly out(F);
    for (const auto& [ij, c] : fbar.c)
        out = out + BivarPoly::monomial(F, ij.first, ij.second, LocalNum::from_fq(F, c));
    return out;
}

// Residues mod pi^c of one axis domain, as LocalNums with digits 0..c-1.
std::vector<LocalNum> axis_residues(const AxisDomain& d, const Fq* F, long c) {
    long q = F->q();
    long total = 1;
    for (long i = 0; i < c; ++i) total *= q;
    std::vector<LocalNum> out;
    for (long key = 0; key < total; ++key) {
        long rest = key;
        unsigned first = static_cast<unsigned>(rest % q);
        if (!d.contains(first)) continue;
        std::vector<std::pair<int, unsigned>> terms;
        for (int i = 0; i < c; ++i) {
            unsigned digit = static_cast<unsigned>(rest % q);
            rest /= q;
            if (digit != 0) terms.push_back({i, digit});
        }
        out.push_back(LocalNum::from_terms(F, terms));
    }
    return out;
}

} // namespace

std::vector<std::pair<unsigned, unsigned>> singular_points(const FqBivar& fbar,
                                                           const ResidueDomain& D) {
    const Fq* F = fbar.F;
    if (!F) fail(errc::internal, "singular_points: missing field");
    FqBivar fx = fbar.dx(), fy = fbar.dy();
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned x = 0; x < static_cast<unsigned>(F->q()); ++x)
        for (unsigned y = 0; y < static_cast<unsigned>(F->q()); ++y) {
            if (!D.contains(x, y)) continue;
            if (fbar.eval(x, y) == 0 && fx.eval(x, y) == 0 && fy.eval(x, y) == 0)
                out.push_back({x, y});
        }
    return out;
}

std::pair<CycloNum, CycloNum> v_sigma(const BivarPoly& f, const ResidueDomain& D,
                                      const Character& chi) {
    const Fq* F = f.field();
    if (!F) fail(errc::internal, "v_sigma: missing field");
    if (!f.is_integral()) fail(errc::invalid, "v_sigma: integrand must be integral");
    long q = F->q();
    FqBivar fbar = f.reduce_mod_pi();

    if (chi.is_trivial()) {
        FqBivar fx = fbar.dx(), fy = fbar.dy();
        long nonzero = 0, nonsing = 0;
        for (unsigned x = 0; x < static_cast<unsigned>(q); ++x)
            for (unsigned y = 0; y < static_cast<unsigned>(q); ++y) {
                if (!D.contains(x, y)) continue;
                if (fbar.eval(x, y) != 0) {
                    ++nonzero;
                } else if (fx.eval(x, y) != 0 || fy.eval(x, y) != 0) {
                    ++nonsing;
                }
            }
        return {CycloNum::rational(Rat(nonzero, q * q)),
                CycloNum::rational(Rat(nonsing, q * q))};
    }

    // Nontrivial character: v is a character sum over residues mod pi^c with
    // unit value, sigma vanishes identically.
    long c = chi.conductor();
    CycloNum sum;
    Rat scale = rat_qpow(q, -2 * c);
    for (const LocalNum& xv : axis_residues(D.x, F, c))
        for (const LocalNum& yv : axis_residues(D.y, F, c)) {
            LocalNum val = f.eval(xv, yv);
            if (val.ord() == std::optional<int>(0)) sum += chi.eval_ac(val);
        }
    return {sum.scaled(scale), CycloNum()};
}

SPFOutcome spf_step(const BivarPoly& f, const ResidueDomain& D, const Character& chi) {
    const Fq* F = f.field();
    long q = F->q();
    auto [v, sigma] = v_sigma(f, D, chi);
    SPFOutcome out;
    out.rational_part = ZetaRat::scalar(q, v);
    if (!sigma.is_zero()) {
        Rat unit_frac = Rat(q - 1, q);
        ZetaRat st = ZetaRat::monomial(q, sigma.scaled(unit_frac), 0, 1);
        out.rational_part += st.geometric_close({1, 1}, 0);
    }
    LocalNum pi = LocalNum::pi_pow(F, 1);
    for (auto [px, py] : singular_points(f.reduce_mod_pi(), D)) {
        Residual r;
        r.px = px;
        r.py = py;
        r.g = f.subst_affine(LocalNum::from_fq(F, px), pi, LocalNum::from_fq(F, py), pi);
        out.residuals.push_back(std::move(r));
    }
    return out;
}

ZetaRat terminal_spf(const BivarPoly& f, const ResidueDomain& D, const Character& chi) {
    SPFOutcome out = spf_step(f, D, chi);
    if (!out.residuals.empty())
        fail(errc::internal, "terminal expansion step has residual singular points");
    return out.rational_part;
}

bool index_zero_on_units(const BivarPoly& r1) {
    if (!r1.is_integral()) fail(errc::invalid, "index check: integrand must be integral");
    const Fq* F = r1.field();
    FqBivar fbar = r1.reduce_mod_pi();
    FqBivar fx = fbar.dx(), fy = fbar.dy();
    for (unsigned x = 1; x < static_cast<unsigned>(F->q()); ++x)
        for (unsigned y = 1; y < static_cast<unsigned>(F->q()); ++y)
            if (fbar.eval(x, y) == 0 && fx.eval(x, y) == 0 && fy.eval(x, y) == 0)
                return false;
    return true;
}

ZetaRat unit_square_zeta(const BivarPoly& r, const Character& chi) {
    if (!r.is_integral()) fail(errc::invalid, "unit-square value: integrand must be integral");
    BivarPoly r1 = constant_lift(r.reduce_mod_pi(), r.field());
    if (!index_zero_on_units(r1))
        fail(errc::hypothesis,
             "unit-square value needs the index condition on the mod-pi part "
             "(some unit point annihilates the reduction and both partials)");
    return terminal_spf(r1, ResidueDomain::units2(), chi);
}

std::pair<CycloNum, long> scaling_multiplier(const LocalNum& alpha, const Character& chi) {
    auto o = alpha.ord();
    if (!o) fail(errc::invalid, "scaling by zero");
    return {chi.eval_ac(alpha), *o};
}

} // namespace igusa
