#pragma once

#include "filtration.hpp"

namespace grfilt {

/// Replaces every differential entry of degree > 1 with 0; degree-1 entries
/// are kept verbatim. Requires a minimal complex. The result is again a
/// complex (checked).
inline Complex linear_part(const QuotientRing& R, const Complex& C) {
    Complex L = C;
    for (std::size_t i = 1; i <= C.steps(); ++i)
        for (auto& col : L.maps[i])
            for (auto& e : col.comp) {
                if (e.is_zero()) continue;
                if (e.degree() == 0) throw ContractError("linear_part requires a minimal complex");
                if (e.degree() != 1) e = Poly{};
            }
    for (std::size_t i = 2; i <= L.steps(); ++i)
        for (const Vec& col : L.maps[i])
            if (!vec_is_zero_in_R(R, apply_columns(R.ring, L.maps[i - 1], col)))
                throw ContractError("linear part failed d o d = 0");
    return L;
}

struct HomologyResult {
    bool vanishes;
    std::optional<Vec> witness;  // kernel generator not in the image
};

/// H_i(C) = 0 tested as: every kernel generator of d_i lies in the image of
/// d_(i+1). When `i` equals the final step of a finished complex the image is
/// zero. Requires 1 <= i <= steps (and i < steps unless finished).
inline HomologyResult homology_vanishes(const QuotientRing& R, const Complex& C, std::size_t i,
                                        const GBOptions& opts = {}) {
    if (i < 1 || i > C.steps() || (i == C.steps() && !C.finished))
        throw InputError("homology index outside the computable window");
    const Layout& L = C.layouts[i];
    SubBasis ker = syzygies(R, C.layouts[i - 1], ModuleOrder(C.layouts[i - 1], R.ring.order),
                            C.maps[i], L, opts);
    std::vector<Vec> image_cols = i + 1 <= C.steps() ? C.maps[i + 1] : std::vector<Vec>{};
    SubBasis img = groebner_basis(R, L, ModuleOrder(L, R.ring.order), image_cols, opts);
    for (const Vec& g : r_generators(R, ker))
        if (!is_member(R, img, g)) return {false, g};
    return {true, std::nullopt};
}

enum class LdVerdict { koszul, certified, truncated_bound };

struct LdReport {
    int window = 0;
    std::vector<int> nonvanishing;  // indices i in [1, window] with H_i(lin F) != 0
    LdVerdict verdict = LdVerdict::truncated_bound;
    int value = 0;  // ld when certified/koszul, else the lower bound
    int margin = 3;
    bool finite_pd = false;
    bool resolution_truncated = false;
};

/// Window-truncated linearity defect: resolve minimally through window+1,
/// take the linear part, test homology. "ld = d" is only certified with a
/// vanishing tail of length >= margin, or when the resolution terminated.
inline LdReport linearity_defect(const QuotientRing& R, const Presentation& P, int window = 8,
                                 int margin = 3, int degree_cap = 24) {
    require_graded(R);
    ResolveOptions opts;
    opts.n_max = window + 1;
    opts.degree_cap = degree_cap;
    Complex C = resolve_minimal(R, P, opts);
    Complex lin = linear_part(R, C);
    LdReport rep;
    rep.window = window;
    rep.margin = margin;
    rep.finite_pd = C.finished;
    rep.resolution_truncated = C.truncated;
    std::size_t last = C.finished ? lin.steps() : (lin.steps() ? lin.steps() - 1 : 0);
    std::size_t top = std::min<std::size_t>(window, last);
    for (std::size_t i = 1; i <= top; ++i)
        if (!homology_vanishes(R, lin, i, opts.gb()).vanishes)
            rep.nonvanishing.push_back(static_cast<int>(i));
    int d = rep.nonvanishing.empty() ? 0 : rep.nonvanishing.back();
    rep.value = d;
    if (C.finished && !C.truncated) {
        rep.verdict = d == 0 ? LdVerdict::koszul : LdVerdict::certified;
    } else if (d == 0 && window >= margin && !C.truncated) {
        rep.verdict = LdVerdict::koszul;
    } else if (d > 0 && window - d >= margin && !C.truncated) {
        rep.verdict = LdVerdict::certified;
    } else {
        rep.verdict = LdVerdict::truncated_bound;
    }
    return rep;
}

/// Presentation of the d-th syzygy module read off a minimal resolution:
/// generators F_d, relations the columns of d_(d+1).
inline Presentation omega_presentation(const Complex& C, std::size_t d) {
    if (d > C.steps()) throw InputError("syzygy index outside the computed window");
    Presentation P;
    P.F = C.layouts[d];
    P.rels = d + 1 <= C.steps() ? C.maps[d + 1] : std::vector<Vec>{};
    return P;
}

struct KoszulReport {
    LdReport ld;
    bool gr_linear = false;       // m-adic gr has a linear resolution in the window
    bool gr_single_degree = false;
    bool homogeneous_type = false;
    bool positive = false;
};

inline Presentation m_adic_presentation(const QuotientRing& R, const Presentation& P) {
    Presentation Q = minimal_presentation(R, P);
    Q.F = Layout(Q.F.deg_shift, std::vector<int>(Q.F.rank(), 0));
    return Q;
}

/// The three window observables of Koszulness: vanishing linear-part
/// homology, linear resolution of the m-adic associated graded, and
/// homogeneous type.
inline KoszulReport koszul_check(const QuotientRing& R, const Presentation& P, int window = 8,
                                 int margin = 3, int degree_cap = 24) {
    require_graded(R);
    KoszulReport rep;
    Presentation Q = m_adic_presentation(R, P);
    rep.ld = linearity_defect(R, Q, window, margin, degree_cap);
    ResolveOptions opts;
    opts.n_max = window;
    opts.degree_cap = degree_cap;
    Presentation gr = associated_graded(R, Q, opts.gb());
    Complex CG = resolve_minimal(R, gr, opts);
    rep.gr_linear = !CG.truncated;
    for (std::size_t i = 1; i <= CG.steps(); ++i)
        for (const Vec& col : CG.maps[i])
            for (const Poly& e : col.comp)
                if (!e.is_zero() && e.degree() != 1) rep.gr_linear = false;
    rep.gr_single_degree = true;
    for (int dsh : gr.F.deg_shift)
        if (dsh != gr.F.deg_shift[0]) rep.gr_single_degree = false;
    rep.homogeneous_type = homogeneous_type(R, Q, opts).holds;
    rep.positive = rep.ld.verdict == LdVerdict::koszul && rep.gr_linear && rep.homogeneous_type;
    return rep;
}

/// Every column of every differential carries a nonzero entry of degree 1
/// (the graded reading of "an entry of m-adic valuation <= 1" under
/// minimality).
inline bool column_valuation_condition(const Complex& C) {
    for (std::size_t i = 1; i <= C.steps(); ++i)
        for (const Vec& col : C.maps[i]) {
            bool has_linear = false;
            for (const Poly& e : col.comp) {
                if (!e.is_zero() && e.degree() == 0)
                    throw ContractError("column_valuation_condition requires a minimal complex");
                if (!e.is_zero() && e.degree() == 1) has_linear = true;
            }
            if (!has_linear) return false;
        }
    return true;
}

struct FormulaReport {
    bool skipped = false;
    std::string skip_reason;
    bool ok = false;
    int lhs = 0, rhs = 0;
};

/// reg(M) = max{ t_i - i : 0 <= i <= d } when ld(M) = d is certified,
/// checked against the regularity of the full (finite) resolution.
inline FormulaReport verify_ld_reg_formula(const QuotientRing& R, const Presentation& P,
                                           int window = 8, int margin = 3, int degree_cap = 24) {
    require_graded(R);
    FormulaReport rep;
    LdReport ld = linearity_defect(R, P, window, margin, degree_cap);
    if (ld.verdict == LdVerdict::truncated_bound) {
        rep.skipped = true;
        rep.skip_reason = "linearity defect not certified in the window";
        return rep;
    }
    ResolveOptions opts;
    opts.n_max = window;
    opts.degree_cap = degree_cap;
    Complex C = resolve_minimal(R, P, opts);
    BettiTable T = betti(C);
    int d = ld.value;
    int lhs = kMinusInfinity;
    for (int i = 0; i <= d && i <= static_cast<int>(T.steps()); ++i)
        if (T.t(i) != kMinusInfinity) lhs = std::max(lhs, T.t(i) - i);
    RegularityReport full = regularity(R.ring, T, C, d);
    int rhs;
    if (C.finished && !C.truncated) {
        rhs = kMinusInfinity;
        for (std::size_t i = 0; i <= T.steps(); ++i)
            if (T.t(i) != kMinusInfinity) rhs = std::max(rhs, T.t(i) - static_cast<int>(i));
    } else {
        rhs = full.value;  // certified-by-ld route; lhs must agree
    }
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.ok = lhs == rhs;
    return rep;
}

struct TorPatternReport {
    bool skipped = false;
    std::string skip_reason;
    bool strands_ok = true;      // beta_(n,j) = 0 off the strands j = i_r + n
    bool persistence_ok = true;  // a vanished strand stays vanished
};

/// Koszul strand pattern: Tor_n(M,k)_j vanishes off j in D(M)+n, and strand
/// vanishing persists upward.
inline TorPatternReport verify_koszul_tor_pattern(const QuotientRing& R, const Presentation& P,
                                                  int window = 8, int margin = 3,
                                                  int degree_cap = 24) {
    require_graded(R);
    TorPatternReport rep;
    KoszulReport kz = koszul_check(R, P, window, margin, degree_cap);
    if (!kz.positive) {
        rep.skipped = true;
        rep.skip_reason = "module is not Koszul within the window";
        return rep;
    }
    ResolveOptions opts;
    opts.n_max = window;
    opts.degree_cap = degree_cap;
    Presentation Q = minimal_presentation(R, P);
    Complex C = resolve_minimal(R, Q, opts);
    BettiTable T = betti(C);
    std::vector<int> D = Q.F.deg_shift;
    std::sort(D.begin(), D.end());
    D.erase(std::unique(D.begin(), D.end()), D.end());
    for (std::size_t n = 1; n <= T.steps(); ++n)
        for (auto& [j, cnt] : T.by_degree[n]) {
            bool on_strand = false;
            for (int ir : D)
                if (j == ir + static_cast<int>(n)) on_strand = true;
            if (cnt > 0 && !on_strand) rep.strands_ok = false;
        }
    for (int ir : D) {
        bool vanished = false;
        for (std::size_t n = 1; n <= T.steps(); ++n) {
            int b = T.beta(n, ir + static_cast<int>(n));
            if (vanished && b != 0) rep.persistence_ok = false;
            if (b == 0) vanished = true;
        }
    }
    return rep;
}

/// reg(gr_M(M)) = t_0(gr_M(M)) for Koszul modules of homogeneous type,
/// checked on the window.
inline FormulaReport verify_gr_regularity_koszul(const QuotientRing& R, const Presentation& P,
                                                 int window = 8, int margin = 3,
                                                 int degree_cap = 24) {
    require_graded(R);
    FormulaReport rep;
    ResolveOptions opts;
    opts.n_max = window;
    opts.degree_cap = degree_cap;
    KoszulReport kz = koszul_check(R, P, window, margin, degree_cap);
    bool ht = homogeneous_type(R, P, opts).holds;
    if (!kz.positive || !ht) {
        rep.skipped = true;
        rep.skip_reason = kz.positive ? "not of homogeneous type in the window"
                                      : "module is not Koszul within the window";
        return rep;
    }
    Presentation gr = associated_graded(R, P, opts.gb());
    BettiTable T = betti(resolve_minimal(R, gr, opts));
    int t0 = T.t(0);
    int m = kMinusInfinity;
    for (std::size_t i = 0; i <= T.steps(); ++i)
        if (T.t(i) != kMinusInfinity) m = std::max(m, T.t(i) - static_cast<int>(i));
    rep.lhs = m;
    rep.rhs = t0;
    rep.ok = m == t0;
    return rep;
}

/// reg(gr_M(M)) = max{ t_i(gr) - i : i <= d } when ld(M) = d is certified and
/// M is of homogeneous type, checked on the window.
inline FormulaReport verify_ld_local_formula(const QuotientRing& R, const Presentation& P,
                                             int window = 8, int margin = 3, int degree_cap = 24) {
    require_graded(R);
    FormulaReport rep;
    ResolveOptions opts;
    opts.n_max = window;
    opts.degree_cap = degree_cap;
    LdReport ld = linearity_defect(R, m_adic_presentation(R, P), window, margin, degree_cap);
    bool ht = homogeneous_type(R, P, opts).holds;
    if (ld.verdict == LdVerdict::truncated_bound || !ht) {
        rep.skipped = true;
        rep.skip_reason = ht ? "linearity defect not certified in the window"
                             : "not of homogeneous type in the window";
        return rep;
    }
    Presentation gr = associated_graded(R, P, opts.gb());
    BettiTable T = betti(resolve_minimal(R, gr, opts));
    int d = ld.value;
    int lhs = kMinusInfinity, rhs = kMinusInfinity;
    for (std::size_t i = 0; i <= T.steps(); ++i)
        if (T.t(i) != kMinusInfinity) {
            rhs = std::max(rhs, T.t(i) - static_cast<int>(i));
            if (static_cast<int>(i) <= d) lhs = std::max(lhs, T.t(i) - static_cast<int>(i));
        }
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.ok = lhs == rhs;
    return rep;
}

struct ProbeReport {
    LdReport ld_k;
    std::vector<int> reg_slope_k;        // t_i - i for the residue field window
    bool homtype_m_adic = true;
    std::vector<bool> homtype_chains;    // per supplied filtration
    bool koszul_evidence = false;
};

/// Experimental probe for the residue field: ld window, homogeneous type
/// with respect to the supplied filtrations, and the regularity window of k.
/// Observations only, never a proof.
inline ProbeReport probe_question_one(const QuotientRing& R,
                                      const std::vector<std::vector<FiltrationStep>>& chains = {},
                                      int window = 8, int margin = 3, int degree_cap = 24) {
    require_graded(R);
    Presentation k;
    k.F = Layout::plain(1);
    for (std::size_t v = 0; v < R.ring.nvars(); ++v)
        k.rels.push_back(vec_unit(R.ring, 1, 0, poly_var(R.ring, v)));
    ProbeReport rep;
    rep.ld_k = linearity_defect(R, k, window, margin, degree_cap);
    ResolveOptions opts;
    opts.n_max = window;
    opts.degree_cap = degree_cap;
    BettiTable T = betti(resolve_minimal(R, k, opts));
    for (std::size_t i = 0; i <= T.steps(); ++i)
        rep.reg_slope_k.push_back(T.t(i) == kMinusInfinity ? kMinusInfinity
                                                           : T.t(i) - static_cast<int>(i));
    rep.homtype_m_adic = homogeneous_type(R, k, opts).holds;
    for (const auto& chain : chains) {
        FiltrationValidation fv = validate_filtration(R, k.F, chain, opts.gb());
        if (!fv.valid) {
            rep.homtype_chains.push_back(false);
            continue;
        }
        rep.homtype_chains.push_back(homogeneous_type(R, fv.presentation, opts).holds);
    }
    rep.koszul_evidence = rep.ld_k.verdict == LdVerdict::koszul;
    return rep;
}

}  // namespace grfilt
