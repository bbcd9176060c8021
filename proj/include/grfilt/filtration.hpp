#pragma once

#include "resolution.hpp"

namespace grfilt {

inline void require_graded(const QuotientRing& R) {
    if (!R.graded) throw InputError("operation requires a graded ring (homogeneous defining ideal)");
}

/// Generators of the initial submodule N* = gr(N) under the special
/// filtration of the layout: initial forms of a Groebner basis computed with
/// the weight-refining module order, returned as a reduced Groebner basis
/// over the graded-side layout.
inline SubBasis initial_submodule(const QuotientRing& R, const Layout& L, const std::vector<Vec>& gens,
                                  const GBOptions& opts = {}) {
    require_graded(R);
    ModuleOrder ord(L, R.ring.order);
    SubBasis wgb = groebner_basis(R, L, ord, gens, opts);
    Layout G = L.graded_side();
    std::vector<Vec> forms;
    for (const Vec& g : r_generators(R, wgb)) forms.push_back(initial_form(R.ring, L, g));
    SubBasis out = groebner_basis(R, G, ModuleOrder(G, R.ring.order), forms, opts);
    out.truncated = out.truncated || wgb.truncated;
    return out;
}

/// A generating set whose initial forms minimally generate gr(N), plus the
/// bookkeeping the resolution construction needs.
struct StandardBasis {
    std::vector<Vec> lifts;     // elements of N
    std::vector<Vec> forms;     // their initial forms (graded-side layout)
    std::vector<int> degrees;   // deg of each lift
    std::vector<int> valuations;
    bool truncated = false;
};

inline StandardBasis minimal_standard_basis(const QuotientRing& R, const Layout& L,
                                            const std::vector<Vec>& gens, const GBOptions& opts = {}) {
    require_graded(R);
    ModuleOrder ord(L, R.ring.order);
    SubBasis wgb = groebner_basis(R, L, ord, gens, opts);
    StandardBasis out;
    out.truncated = wgb.truncated;
    std::vector<Vec> cands = r_generators(R, wgb);
    std::stable_sort(cands.begin(), cands.end(), [&](const Vec& a, const Vec& b) {
        return valuation(L, a) < valuation(L, b);
    });
    Layout G = L.graded_side();
    ModuleOrder gord(G, R.ring.order);
    SubBasis have = groebner_basis(R, G, gord, {}, opts);
    for (const Vec& c : cands) {
        if (vec_degree(L, c) > opts.degree_cap) {
            out.truncated = true;
            continue;
        }
        Vec f = initial_form(R.ring, L, c);
        if (normal_form(R, have, f).is_zero()) continue;
        have = gb_extend(R, have, {f}, opts);
        out.lifts.push_back(c);
        out.forms.push_back(f);
        out.degrees.push_back(vec_degree(L, c));
        out.valuations.push_back(valuation(L, c));
    }
    return out;
}

/// gr_M(M) as a graded presentation over R^g (= R in graded mode): the free
/// module shifted by the valuations modulo the initial submodule.
inline Presentation associated_graded(const QuotientRing& R, const Presentation& input,
                                      const GBOptions& opts = {}) {
    require_graded(R);
    Presentation P = minimal_presentation(R, input);
    Presentation G;
    G.F = P.F.graded_side();
    G.rels = r_generators(R, initial_submodule(R, P.F, P.rels, opts));
    return G;
}

struct StandardBasisCheck {
    bool generates = true;
    bool kernels_match = true;
    std::optional<Vec> witness;  // generator of ker(gr d) missing from gr(ker d)

    bool ok() const { return generates && kernels_match; }
};

/// Checks whether the candidates form a standard basis of the submodule
/// N = <target> of the filtered free module F: they must generate N and
/// satisfy gr(ker d) = ker(gr d) for d sending basis elements to the
/// candidates.
inline StandardBasisCheck is_standard_basis(const QuotientRing& R, const Layout& F,
                                            const std::vector<Vec>& candidates,
                                            const std::vector<Vec>& target,
                                            const GBOptions& opts = {}) {
    require_graded(R);
    StandardBasisCheck res;
    ModuleOrder ord(F, R.ring.order);
    SubBasis bc = groebner_basis(R, F, ord, candidates, opts);
    SubBasis bt = groebner_basis(R, F, ord, target, opts);
    for (const Vec& v : target)
        if (!is_member(R, bc, v)) res.generates = false;
    for (const Vec& v : candidates)
        if (!is_member(R, bt, v)) res.generates = false;

    std::vector<int> deg, val;
    std::vector<Vec> nonzero;
    for (const Vec& f : candidates) {
        if (f.is_zero()) continue;
        nonzero.push_back(f);
        deg.push_back(vec_degree(F, f));
        val.push_back(valuation(F, f));
    }
    Layout D(deg, val);
    SubBasis ker_d = syzygies(R, F, ord, nonzero, D, opts);
    SubBasis gr_of_ker = initial_submodule(R, D, r_generators(R, ker_d), opts);

    Layout Fg = F.graded_side(), Dg = D.graded_side();
    std::vector<Vec> forms;
    for (const Vec& f : nonzero) forms.push_back(initial_form(R.ring, F, f));
    SubBasis ker_gr = syzygies(R, Fg, ModuleOrder(Fg, R.ring.order), forms, Dg, opts);

    for (const Vec& g : r_generators(R, ker_gr))
        if (!is_member(R, gr_of_ker, g)) {
            res.kernels_match = false;
            res.witness = g;
            break;
        }
    // the containment gr(ker d) <= ker(gr d) is automatic; re-checked cheaply
    for (const Vec& g : r_generators(R, gr_of_ker))
        if (!is_member(R, ker_gr, g)) res.kernels_match = false;
    return res;
}

struct DeltaInvariants {
    std::vector<int> delta;   // sorted, unique: deg(f_j) - v(f_j)
    std::vector<int> degrees; // sorted, unique: D(M)
    int v_max = 0;
    int u_min = 0;
    bool empty = true;
};

/// Degree-minus-valuation data of a minimal homogeneous standard basis of M,
/// read off the pruned presentation's generators.
inline DeltaInvariants delta_invariants(const QuotientRing& R, const Presentation& input) {
    require_graded(R);
    Presentation P = minimal_presentation(R, input);
    DeltaInvariants d;
    for (std::size_t i = 0; i < P.F.rank(); ++i) {
        d.delta.push_back(P.F.weight(i));
        d.degrees.push_back(P.F.deg_shift[i]);
        d.empty = false;
    }
    std::sort(d.delta.begin(), d.delta.end());
    d.delta.erase(std::unique(d.delta.begin(), d.delta.end()), d.delta.end());
    std::sort(d.degrees.begin(), d.degrees.end());
    d.degrees.erase(std::unique(d.degrees.begin(), d.degrees.end()), d.degrees.end());
    if (!d.empty) {
        d.v_max = d.delta.back();
        d.u_min = d.delta.front();
    }
    return d;
}

struct FilteredResolutionPair {
    Complex F;  // resolution of M over R, layouts carry degree and valuation shifts
    Complex G;  // gr-side: minimal graded free resolution of gr(M), valuation grading
};

/// Filtered free resolution of M with a special filtration whose associated
/// graded complex is the minimal resolution of gr(M): each step takes a
/// minimal homogeneous standard basis of the kernel.
inline FilteredResolutionPair filtered_resolution(const QuotientRing& R, const Presentation& input,
                                                  const ResolveOptions& opts = {}) {
    require_graded(R);
    Presentation P = minimal_presentation(R, input);
    FilteredResolutionPair pair;
    pair.F.layouts.push_back(P.F);
    pair.F.maps.push_back({});
    pair.G.layouts.push_back(P.F.graded_side());
    pair.G.maps.push_back({});
    std::vector<Vec> K = P.rels;
    for (int i = 1; i <= opts.n_max; ++i) {
        Layout L = pair.F.layouts.back();
        StandardBasis sb = minimal_standard_basis(R, L, K, opts.gb());
        pair.F.truncated = pair.F.truncated || sb.truncated;
        if (sb.lifts.empty()) {
            if (!pair.F.truncated) pair.F.finished = true;
            break;
        }
        Layout Lnew(sb.degrees, sb.valuations);
        pair.F.layouts.push_back(Lnew);
        pair.F.maps.push_back(sb.lifts);
        pair.G.layouts.push_back(Lnew.graded_side());
        pair.G.maps.push_back(sb.forms);
        SubBasis syz = syzygies(R, L, ModuleOrder(L, R.ring.order), sb.lifts, Lnew, opts.gb());
        pair.F.truncated = pair.F.truncated || syz.truncated;
        K = r_generators(R, syz);
    }
    if (!pair.F.finished && K.empty() && !pair.F.truncated) pair.F.finished = true;
    pair.G.finished = pair.F.finished;
    pair.G.truncated = pair.F.truncated;
    return pair;
}

struct HomogeneousTypeReport {
    bool holds = true;
    bool bound_ok = true;  // beta_i(M) <= beta_i(gr M) throughout
    std::vector<int> betti_M, betti_gr;
    bool truncated = false;
};

/// Compares beta_i(M) with beta_i(gr M) through the window.
inline HomogeneousTypeReport homogeneous_type(const QuotientRing& R, const Presentation& P,
                                              const ResolveOptions& opts = {}) {
    require_graded(R);
    Complex CM = resolve_minimal(R, P, opts);
    Complex CG = resolve_minimal(R, associated_graded(R, P, opts.gb()), opts);
    BettiTable TM = betti(CM), TG = betti(CG);
    HomogeneousTypeReport rep;
    rep.truncated = CM.truncated || CG.truncated;
    std::size_t n = std::max(TM.steps(), TG.steps());
    for (std::size_t i = 0; i <= n; ++i) {
        rep.betti_M.push_back(TM.total(i));
        rep.betti_gr.push_back(TG.total(i));
        if (TM.total(i) != TG.total(i)) rep.holds = false;
        if (TM.total(i) > TG.total(i)) rep.bound_ok = false;
    }
    return rep;
}

struct ShiftBoundRow {
    int i;
    int t_M;       // kMinusInfinity when F_i = 0
    int t_gr;
    bool upper_ok; // t_i(M) <= t_i(gr M) + v
    bool lower_ok; // only meaningful under homogeneous type
};

struct ShiftBoundReport {
    std::vector<ShiftBoundRow> rows;
    DeltaInvariants delta;
    bool homogeneous_type = false;
    bool all_upper = true;
    bool all_lower = true;  // vacuously true when not homogeneous type
    bool reg_upper_ok = true;  // windowed aggregate of the regularity bound
};

/// Per-step shift inequalities t_i(M) <= t_i(gr M) + v, plus the lower bound
/// t_i(gr M) + u <= t_i(M) when M is of homogeneous type.
inline ShiftBoundReport verify_shift_bounds(const QuotientRing& R, const Presentation& P,
                                            const ResolveOptions& opts = {}) {
    require_graded(R);
    ShiftBoundReport rep;
    rep.delta = delta_invariants(R, P);
    Complex CM = resolve_minimal(R, P, opts);
    Complex CG = resolve_minimal(R, associated_graded(R, P, opts.gb()), opts);
    BettiTable TM = betti(CM), TG = betti(CG);
    HomogeneousTypeReport ht = homogeneous_type(R, P, opts);
    rep.homogeneous_type = ht.holds;

    std::size_t n = std::min<std::size_t>(opts.n_max, std::max(TM.steps(), TG.steps()));
    int regM = kMinusInfinity, reggr = kMinusInfinity;
    for (std::size_t i = 0; i <= n; ++i) {
        ShiftBoundRow row;
        row.i = static_cast<int>(i);
        row.t_M = TM.t(i);
        row.t_gr = TG.t(i);
        row.upper_ok = row.t_M == kMinusInfinity ||
                       (row.t_gr != kMinusInfinity && row.t_M <= row.t_gr + rep.delta.v_max);
        row.lower_ok = !rep.homogeneous_type || row.t_gr == kMinusInfinity ||
                       (row.t_M != kMinusInfinity && row.t_gr + rep.delta.u_min <= row.t_M);
        rep.all_upper = rep.all_upper && row.upper_ok;
        rep.all_lower = rep.all_lower && row.lower_ok;
        rep.rows.push_back(row);
        if (row.t_M != kMinusInfinity) regM = std::max(regM, row.t_M - row.i);
        if (row.t_gr != kMinusInfinity) reggr = std::max(reggr, row.t_gr - row.i);
    }
    rep.reg_upper_ok = regM == kMinusInfinity || regM <= reggr + rep.delta.v_max;
    return rep;
}

struct FiltrationStep {
    int valuation;
    std::vector<Vec> gens;
};

struct FiltrationValidation {
    bool valid = true;
    bool encodable = false;  // all chain generators homogeneous
    std::string message;
    Presentation presentation;  // valuation-weighted encoding of the chain
};

/// Checks a finite chain F_0 >= F_1 >= ... >= F_s (extended m-adically) for
/// inclusions and m-stability, then encodes it as a valuation-weighted
/// presentation of the module generated by F_0. Inhomogeneous chains are
/// validated but cannot be encoded for the graded machinery.
inline FiltrationValidation validate_filtration(const QuotientRing& R, const Layout& F,
                                                const std::vector<FiltrationStep>& chain,
                                                const GBOptions& opts = {}) {
    require_graded(R);
    FiltrationValidation out;
    if (chain.empty()) {
        out.valid = false;
        out.message = "empty filtration chain";
        return out;
    }
    for (std::size_t p = 0; p < chain.size(); ++p)
        if (chain[p].valuation != static_cast<int>(p)) {
            out.valid = false;
            out.message = "filtration steps must carry consecutive valuations 0..s";
            return out;
        }
    GBOptions loose = opts;
    loose.graded = false;  // stability checks are valid for inhomogeneous chains
    ModuleOrder ord(F, R.ring.order);
    std::vector<SubBasis> bases;
    for (const auto& step : chain) bases.push_back(groebner_basis(R, F, ord, step.gens, loose));
    for (std::size_t p = 0; p + 1 < chain.size(); ++p) {
        for (const Vec& g : chain[p + 1].gens)
            if (!is_member(R, bases[p], g)) {
                out.valid = false;
                out.message = "step " + std::to_string(p + 1) + " is not contained in step " +
                              std::to_string(p) + "; witness " + vec_to_string(R.ring, g);
                return out;
            }
        for (const Vec& g : chain[p].gens)
            for (std::size_t v = 0; v < R.ring.nvars(); ++v) {
                Vec xg = vec_mul_poly(R.ring, g, poly_var(R.ring, v));
                if (!is_member(R, bases[p + 1], xg)) {
                    out.valid = false;
                    out.message = "m-stability fails: " + R.ring.vars[v] + " * " +
                                  vec_to_string(R.ring, g) + " is not in step " + std::to_string(p + 1);
                    return out;
                }
            }
    }
    // encode: one generator per supplied element, valuation = its step
    out.encodable = true;
    for (const auto& step : chain)
        for (const Vec& g : step.gens)
            if (!g.is_zero() && !vec_is_homogeneous(F, g)) out.encodable = false;
    if (!out.encodable) {
        out.message = "chain is valid but has inhomogeneous generators; no graded encoding";
        return out;
    }
    std::vector<Vec> all;
    std::vector<int> deg, val;
    for (const auto& step : chain)
        for (const Vec& g : step.gens) {
            if (g.is_zero()) continue;
            all.push_back(g);
            deg.push_back(vec_degree(F, g));
            val.push_back(step.valuation);
        }
    Layout D(deg, val);
    SubBasis ker = syzygies(R, F, ord, all, D, opts);
    out.presentation.F = D;
    out.presentation.rels = r_generators(R, ker);
    return out;
}

}  // namespace grfilt
