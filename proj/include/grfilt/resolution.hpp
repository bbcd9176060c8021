#pragma once

#include <map>
#include <optional>
#include <string>

#include "groebner.hpp"

namespace grfilt {

/// Module presentation M = F/N over R: a shifted free module and relation
/// generators. The layout's valuation shifts encode the special filtration,
/// so this is also the representation of a filtered module (M, M).
struct Presentation {
    Layout F;
    std::vector<Vec> rels;
};

struct ResolveOptions {
    int n_max = 8;
    int degree_cap = 24;

    GBOptions gb() const { return GBOptions{degree_cap, true}; }
};

/// Chain of shifted free modules with matrices d_i : F_i -> F_(i-1) stored as
/// column vectors; maps[0] is unused. `finished` means some F_i = 0 was
/// reached inside the window, `truncated` means a degree cap was hit and the
/// tail may be incomplete.
struct Complex {
    std::vector<Layout> layouts;
    std::vector<std::vector<Vec>> maps;
    bool finished = false;
    bool truncated = false;

    std::size_t steps() const { return layouts.empty() ? 0 : layouts.size() - 1; }
    const Poly& entry(std::size_t i, std::size_t r, std::size_t s) const { return maps[i][s].comp[r]; }
};

inline Vec apply_columns(const Ring& R, const std::vector<Vec>& cols, const Vec& v) {
    Vec out(cols.empty() ? 0 : cols[0].rank());
    for (std::size_t s = 0; s < cols.size(); ++s) {
        if (v.comp[s].is_zero()) continue;
        out = vec_add(R, out, vec_mul_poly(R, cols[s], v.comp[s]));
    }
    return out;
}

inline bool matrix_is_homogeneous(const Layout& dom, const Layout& cod, const std::vector<Vec>& cols) {
    for (std::size_t s = 0; s < cols.size(); ++s)
        for (std::size_t r = 0; r < cod.rank(); ++r) {
            const Poly& e = cols[s].comp[r];
            if (e.is_zero()) continue;
            if (!e.is_homogeneous() || e.degree() != dom.deg_shift[s] - cod.deg_shift[r]) return false;
        }
    return true;
}

/// Strips generators hit by unit entries in the relations. In filtered use a
/// pruned generator's replacement must sit at least as deep in the filtration,
/// otherwise the declared filtration would change.
inline Presentation minimal_presentation(const QuotientRing& R, Presentation P) {
    for (bool again = true; again;) {
        again = false;
        for (std::size_t k = 0; k < P.rels.size() && !again; ++k) {
            for (std::size_t i = 0; i < P.F.rank() && !again; ++i) {
                const Poly& e = P.rels[k].comp[i];
                if (e.is_zero() || e.degree() != 0) continue;
                int v_rest = kInfinity;
                for (std::size_t j = 0; j < P.F.rank(); ++j)
                    if (j != i && !P.rels[k].comp[j].is_zero())
                        v_rest = std::min(v_rest, P.rels[k].comp[j].ord() + P.F.val_shift[j]);
                if (v_rest < P.F.val_shift[i])
                    throw InputError("presentation not filtration-adapted: unit relation drops valuation");
                std::uint32_t cinv = R.ring.field.inv(e.terms[0].c);
                Vec pivot = P.rels[k];
                for (std::size_t r = 0; r < P.rels.size(); ++r) {
                    if (r == k) continue;
                    const Poly& coeff = P.rels[r].comp[i];
                    if (coeff.is_zero()) continue;
                    Vec adj = vec_mul_poly(R.ring, pivot, poly_scale(R.ring, coeff, cinv));
                    P.rels[r] = vec_sub(R.ring, P.rels[r], adj);
                }
                // delete generator i and relation k
                std::vector<int> deg, val;
                for (std::size_t j = 0; j < P.F.rank(); ++j)
                    if (j != i) {
                        deg.push_back(P.F.deg_shift[j]);
                        val.push_back(P.F.val_shift[j]);
                    }
                P.F = Layout(deg, val);
                std::vector<Vec> rels;
                for (std::size_t r = 0; r < P.rels.size(); ++r) {
                    if (r == k) continue;
                    Vec w(P.F.rank());
                    std::size_t t = 0;
                    for (std::size_t j = 0; j < P.rels[r].rank(); ++j)
                        if (j != i) w.comp[t++] = P.rels[r].comp[j];
                    rels.push_back(std::move(w));
                }
                P.rels = std::move(rels);
                again = true;
            }
        }
    }
    std::vector<Vec> rels;
    for (Vec& v : P.rels)
        if (!vec_is_zero_in_R(R, v)) rels.push_back(std::move(v));
    P.rels = std::move(rels);
    return P;
}

/// Minimal generating set of the submodule spanned by `cands` inside L:
/// ascending-degree greedy with membership pruning (graded Nakayama).
/// Candidates above the degree cap are dropped and flagged, because the
/// membership basis is only complete up to the cap.
inline std::vector<Vec> minimal_generators(const QuotientRing& R, const Layout& L,
                                           const std::vector<Vec>& cands, const GBOptions& opts,
                                           bool* truncated = nullptr) {
    ModuleOrder ord(L, R.ring.order);
    std::vector<Vec> sorted = cands;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const Vec& a, const Vec& b) { return vec_degree(L, a) < vec_degree(L, b); });
    SubBasis have = groebner_basis(R, L, ord, {}, opts);
    std::vector<Vec> kept;
    for (const Vec& c : sorted) {
        if (vec_degree(L, c) > opts.degree_cap) {
            if (truncated) *truncated = true;
            continue;
        }
        if (normal_form(R, have, c).is_zero()) continue;
        kept.push_back(c);
        have = gb_extend(R, have, {c}, opts);
    }
    return kept;
}

/// Minimal graded free resolution of M through homological degree n_max:
/// iterate minimal kernel generators, so every differential entry lies in m.
inline Complex resolve_minimal(const QuotientRing& R, const Presentation& input,
                               const ResolveOptions& opts = {}) {
    Presentation P = minimal_presentation(R, input);
    Complex C;
    C.layouts.push_back(P.F);
    C.maps.push_back({});
    std::vector<Vec> K = P.rels;
    for (int i = 1; i <= opts.n_max; ++i) {
        Layout L = C.layouts.back();
        bool capped = false;
        std::vector<Vec> W = minimal_generators(R, L, K, opts.gb(), &capped);
        C.truncated = C.truncated || capped;
        if (W.empty()) {
            if (!C.truncated) C.finished = true;
            break;
        }
        std::vector<int> deg, val;
        for (const Vec& w : W) {
            deg.push_back(vec_degree(L, w));
            int v = valuation(L, w);
            val.push_back(v == kInfinity ? 0 : v);
        }
        Layout Lnew(deg, val);
        C.layouts.push_back(Lnew);
        C.maps.push_back(W);
        SubBasis syz = syzygies(R, L, ModuleOrder(L, R.ring.order), W, Lnew, opts.gb());
        C.truncated = C.truncated || syz.truncated;
        K = r_generators(R, syz);
    }
    if (!C.finished && K.empty() && !C.truncated)
        C.finished = true;  // the kernel of the last computed map is already zero
    return C;
}

// ---------------------------------------------------------------------------
// Betti tables

inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

struct BettiTable {
    /// by_degree[i][j] = number of degree-j basis elements of F_i.
    std::vector<std::map<int, int>> by_degree;
    bool finished = false;
    bool truncated = false;

    std::size_t steps() const { return by_degree.empty() ? 0 : by_degree.size() - 1; }
    int total(std::size_t i) const {
        int s = 0;
        if (i < by_degree.size())
            for (auto& [j, n] : by_degree[i]) s += n;
        return s;
    }
    int beta(std::size_t i, int j) const {
        if (i >= by_degree.size()) return 0;
        auto it = by_degree[i].find(j);
        return it == by_degree[i].end() ? 0 : it->second;
    }
    /// Top degree in homological step i; -infinity sentinel when F_i = 0.
    int t(std::size_t i) const {
        if (i >= by_degree.size() || by_degree[i].empty()) return kMinusInfinity;
        return by_degree[i].rbegin()->first;
    }
    std::vector<int> degrees(std::size_t i) const {
        std::vector<int> d;
        if (i < by_degree.size())
            for (auto& [j, n] : by_degree[i])
                for (int k = 0; k < n; ++k) d.push_back(j);
        return d;
    }
};

/// Reads the graded Betti numbers off a minimal complex.
inline BettiTable betti(const Complex& C, bool check_minimal = true) {
    if (check_minimal) {
        for (std::size_t i = 1; i < C.maps.size(); ++i)
            for (const Vec& col : C.maps[i])
                for (const Poly& e : col.comp)
                    if (!e.is_zero() && e.degree() == 0)
                        throw ContractError("betti requires a minimal complex");
    }
    BettiTable T;
    for (const Layout& L : C.layouts) {
        std::map<int, int> row;
        for (int d : L.deg_shift) ++row[d];
        T.by_degree.push_back(std::move(row));
    }
    T.finished = C.finished;
    T.truncated = C.truncated;
    return T;
}

// ---------------------------------------------------------------------------
// Matrix matching up to row/column permutation and unit scaling, with a
// uniform degree-shift delta. Used by the periodicity detector.

namespace detail {

inline std::string poly_key(const Ring& R, const Poly& f) {
    if (f.is_zero()) return "";
    return poly_to_string(R, poly_monic(R, f));
}

struct MatchProblem {
    const Ring* R;
    std::size_t nr, nc;
    const std::vector<Vec>*A, *B;  // columns
    std::vector<int> arow, acol, brow, bcol;
    int delta;

    bool assign_rows(std::vector<long>& sigma, std::size_t r, std::vector<bool>& used,
                     const std::vector<long>& tau) const {
        if (r == nr) return true;
        for (std::size_t r2 = 0; r2 < nr; ++r2) {
            if (used[r2] || brow[r] != arow[r2] + delta) continue;
            bool ok = true;
            for (std::size_t c = 0; c < nc && ok; ++c) {
                const Poly& pb = (*B)[c].comp[r];
                const Poly& pa = (*A)[static_cast<std::size_t>(tau[c])].comp[r2];
                if (poly_key(*R, pb) != poly_key(*R, pa)) ok = false;
            }
            if (!ok) continue;
            used[r2] = true;
            sigma[r] = static_cast<long>(r2);
            if (assign_rows(sigma, r + 1, used, tau)) return true;
            used[r2] = false;
            sigma[r] = -1;
        }
        return false;
    }

    bool scalars_factor(const std::vector<long>& sigma, const std::vector<long>& tau) const {
        // need lc(B[r][c]) / lc(A[sigma r][tau c]) = alpha_r * beta_c
        const PrimeField& F = R->field;
        std::vector<std::uint32_t> alpha(nr, 0), beta(nc, 0);
        for (std::size_t r0 = 0; r0 < nr; ++r0) {
            if (alpha[r0]) continue;
            alpha[r0] = 1;
            // BFS over the bipartite nonzero-entry graph
            std::vector<std::size_t> stack_r{r0};
            std::vector<std::size_t> stack_c;
            while (!stack_r.empty() || !stack_c.empty()) {
                if (!stack_r.empty()) {
                    std::size_t r = stack_r.back();
                    stack_r.pop_back();
                    for (std::size_t c = 0; c < nc; ++c) {
                        const Poly& pb = (*B)[c].comp[r];
                        if (pb.is_zero()) continue;
                        const Poly& pa = (*A)[static_cast<std::size_t>(tau[c])].comp[static_cast<std::size_t>(sigma[r])];
                        std::uint32_t lam = F.div(pb.lt().c, pa.lt().c);
                        std::uint32_t want = F.div(lam, alpha[r]);
                        if (beta[c] == 0) {
                            beta[c] = want;
                            stack_c.push_back(c);
                        } else if (beta[c] != want) {
                            return false;
                        }
                    }
                } else {
                    std::size_t c = stack_c.back();
                    stack_c.pop_back();
                    for (std::size_t r = 0; r < nr; ++r) {
                        const Poly& pb = (*B)[c].comp[r];
                        if (pb.is_zero()) continue;
                        const Poly& pa = (*A)[static_cast<std::size_t>(tau[c])].comp[static_cast<std::size_t>(sigma[r])];
                        std::uint32_t lam = F.div(pb.lt().c, pa.lt().c);
                        std::uint32_t want = F.div(lam, beta[c]);
                        if (alpha[r] == 0) {
                            alpha[r] = want;
                            stack_r.push_back(r);
                        } else if (alpha[r] != want) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    }

    bool assign_cols(std::vector<long>& tau, std::size_t c, std::vector<bool>& used) const {
        if (c == nc) {
            std::vector<long> sigma(nr, -1);
            std::vector<bool> rused(nr, false);
            if (!assign_rows(sigma, 0, rused, tau)) return false;
            return scalars_factor(sigma, tau);
        }
        for (std::size_t c2 = 0; c2 < nc; ++c2) {
            if (used[c2] || bcol[c] != acol[c2] + delta) continue;
            // cheap signature check: multiset of (row shift, entry key)
            std::multiset<std::pair<int, std::string>> sb, sa;
            for (std::size_t r = 0; r < nr; ++r) {
                if (!(*B)[c].comp[r].is_zero()) sb.insert({brow[r] - delta, poly_key(*R, (*B)[c].comp[r])});
                if (!(*A)[c2].comp[r].is_zero()) sa.insert({arow[r], poly_key(*R, (*A)[c2].comp[r])});
            }
            if (sb != sa) continue;
            used[c2] = true;
            tau[c] = static_cast<long>(c2);
            if (assign_cols(tau, c + 1, used)) return true;
            used[c2] = false;
            tau[c] = -1;
        }
        return false;
    }
};

}  // namespace detail

/// B = D_r * P_row * A * P_col * D_col with shift offset delta on all rows
/// and columns.
inline bool matrices_match(const Ring& R, const std::vector<Vec>& A, const Layout& A_cod,
                           const Layout& A_dom, const std::vector<Vec>& B, const Layout& B_cod,
                           const Layout& B_dom, int delta) {
    if (A.size() != B.size() || A_cod.rank() != B_cod.rank()) return false;
    detail::MatchProblem mp;
    mp.R = &R;
    mp.nr = A_cod.rank();
    mp.nc = A.size();
    mp.A = &A;
    mp.B = &B;
    mp.arow = A_cod.deg_shift;
    mp.acol = A_dom.deg_shift;
    mp.brow = B_cod.deg_shift;
    mp.bcol = B_dom.deg_shift;
    mp.delta = delta;
    std::vector<long> tau(mp.nc, -1);
    std::vector<bool> used(mp.nc, false);
    if (mp.nc == 0) return true;
    return mp.assign_cols(tau, 0, used);
}

struct Periodicity {
    std::size_t start;  // first index i with d_(i+p) matching d_i
    std::size_t period;
    int drift;  // uniform shift gained per period
};

/// Looks for d_(i+p) == d_i up to permutation/scaling with a uniform shift,
/// requiring at least two full periods inside the window.
inline std::optional<Periodicity> detect_periodicity(const Ring& R, const Complex& C) {
    std::size_t n = C.steps();
    for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
        for (std::size_t i0 = 1; i0 + 2 * p <= n; ++i0) {
            // candidate drift from the shift multisets
            std::vector<int> a = C.layouts[i0].deg_shift, b = C.layouts[i0 + p].deg_shift;
            if (a.size() != b.size() || a.empty()) continue;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            int delta = b[0] - a[0];
            bool ok = true;
            for (std::size_t k = 0; k < a.size(); ++k)
                if (b[k] - a[k] != delta) ok = false;
            if (!ok) continue;
            for (std::size_t i = i0; i + p <= n && ok; ++i)
                ok = matrices_match(R, C.maps[i], C.layouts[i - 1], C.layouts[i], C.maps[i + p],
                                    C.layouts[i + p - 1], C.layouts[i + p], delta);
            if (ok) return Periodicity{i0, p, delta};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Regularity

enum class RegStatus { exact_finite_pd, exact_certified_by_ld, divergent_periodic, lower_bound };

inline const char* to_string(RegStatus s) {
    switch (s) {
        case RegStatus::exact_finite_pd: return "exact-finite-pd";
        case RegStatus::exact_certified_by_ld: return "exact-certified-by-ld";
        case RegStatus::divergent_periodic: return "divergent-periodic";
        case RegStatus::lower_bound: return "lower-bound";
    }
    return "?";
}

struct RegularityReport {
    RegStatus status;
    bool infinite = false;
    int value = 0;  // exact value, or the lower bound
    std::vector<int> slope;  // t_i - i per computed step (skipping empty F_i)
    std::optional<Periodicity> periodicity;
};

/// Truncation-aware regularity verdict. Exact when the resolution terminated
/// or an ld certificate d < n_max is supplied; divergent when matrix
/// periodicity with drift > period is detected; otherwise a lower bound.
inline RegularityReport regularity(const Ring& R, const BettiTable& T, const Complex& C,
                                   std::optional<int> ld_hint = std::nullopt) {
    RegularityReport rep;
    int window_max = kMinusInfinity;
    for (std::size_t i = 0; i <= T.steps(); ++i) {
        int ti = T.t(i);
        rep.slope.push_back(ti == kMinusInfinity ? kMinusInfinity : ti - static_cast<int>(i));
        if (ti != kMinusInfinity) window_max = std::max(window_max, ti - static_cast<int>(i));
    }
    if (ld_hint &&
        (*ld_hint < 0 || (!C.finished && static_cast<std::size_t>(*ld_hint) >= C.steps())))
        throw InputError("linearity-defect hint is not inside the computed window");
    if (C.finished && !C.truncated) {
        rep.status = RegStatus::exact_finite_pd;
        rep.value = window_max;
        return rep;
    }
    if (ld_hint) {
        int d = *ld_hint;
        int m = kMinusInfinity;
        for (int i = 0; i <= d && i <= static_cast<int>(T.steps()); ++i)
            if (T.t(i) != kMinusInfinity) m = std::max(m, T.t(i) - i);
        rep.status = RegStatus::exact_certified_by_ld;
        rep.value = m;
        return rep;
    }
    if (auto per = detect_periodicity(R, C); per && per->drift > static_cast<int>(per->period)) {
        rep.status = RegStatus::divergent_periodic;
        rep.infinite = true;
        rep.periodicity = per;
        return rep;
    }
    rep.status = RegStatus::lower_bound;
    rep.value = window_max;
    return rep;
}

// ---------------------------------------------------------------------------
// Diagnostics

struct ComplexDiagnostics {
    bool dd_zero = true;
    bool homogeneous = true;
    bool minimal = true;
    bool presents_module = true;
    std::vector<bool> exact_at;  // index i-1 holds exactness at step i
    std::vector<std::string> messages;

    bool all_good() const {
        if (!(dd_zero && homogeneous && minimal && presents_module)) return false;
        for (bool e : exact_at)
            if (!e) return false;
        return true;
    }
};

/// Reports d o d = 0, homogeneity, minimality, and exactness at steps
/// 1..steps-1 via kernel-in-image membership.
inline ComplexDiagnostics verify_complex(const QuotientRing& R, const Complex& C,
                                         const std::vector<Vec>* presented_relations = nullptr,
                                         const GBOptions& opts = {}) {
    ComplexDiagnostics d;
    for (std::size_t i = 1; i <= C.steps(); ++i) {
        if (!matrix_is_homogeneous(C.layouts[i], C.layouts[i - 1], C.maps[i])) {
            d.homogeneous = false;
            d.messages.push_back("map " + std::to_string(i) + " is not homogeneous");
        }
        for (const Vec& col : C.maps[i])
            for (const Poly& e : col.comp)
                if (!e.is_zero() && e.degree() == 0) {
                    d.minimal = false;
                    d.messages.push_back("map " + std::to_string(i) + " has a unit entry");
                }
        if (i >= 2)
            for (const Vec& col : C.maps[i]) {
                Vec img = apply_columns(R.ring, C.maps[i - 1], col);
                if (!vec_is_zero_in_R(R, img)) {
                    d.dd_zero = false;
                    d.messages.push_back("d_" + std::to_string(i - 1) + " o d_" + std::to_string(i) + " != 0");
                }
            }
    }
    if (presented_relations && !C.layouts.empty()) {
        ModuleOrder ord(C.layouts[0], R.ring.order);
        SubBasis bn = groebner_basis(R, C.layouts[0], ord, *presented_relations, opts);
        SubBasis bc = C.steps() >= 1 ? groebner_basis(R, C.layouts[0], ord, C.maps[1], opts)
                                     : groebner_basis(R, C.layouts[0], ord, {}, opts);
        for (const Vec& v : *presented_relations)
            if (!is_member(R, bc, v)) d.presents_module = false;
        if (C.steps() >= 1)
            for (const Vec& v : C.maps[1])
                if (!is_member(R, bn, v)) d.presents_module = false;
        if (!d.presents_module) d.messages.push_back("image of d_1 differs from the relation module");
    }
    for (std::size_t i = 1; i + 1 <= C.steps(); ++i) {
        const Layout& L = C.layouts[i];
        SubBasis ker = syzygies(R, C.layouts[i - 1], ModuleOrder(C.layouts[i - 1], R.ring.order),
                                C.maps[i], L, opts);
        SubBasis img = groebner_basis(R, L, ModuleOrder(L, R.ring.order), C.maps[i + 1], opts);
        bool exact = true;
        for (const Vec& g : r_generators(R, ker))
            if (!is_member(R, img, g)) exact = false;
        d.exact_at.push_back(exact);
        if (!exact) d.messages.push_back("homology at step " + std::to_string(i) + " is nonzero");
    }
    return d;
}

}  // namespace grfilt
