#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "module.hpp"

namespace grfilt {

struct GBOptions {
    int degree_cap = 24;
    bool graded = true;  // require homogeneous inputs
};

/// R = S/I with the reduced Groebner basis of I precomputed. I = 0 gives the
/// polynomial ring itself.
struct QuotientRing {
    Ring ring;
    std::vector<Poly> ideal;
    std::vector<Poly> ideal_gb;
    bool graded = true;
    bool truncated = false;
};

/// Generators of a submodule of a shifted free module, normally a reduced
/// Groebner basis. `elems` is the reduced basis of span + I*F computed in the
/// ambient polynomial ring, so it may contain elements that vanish in R; use
/// r_generators() for the R-meaningful ones.
struct SubBasis {
    Layout layout;
    ModuleOrder order;
    std::vector<Vec> elems;
    bool is_reduced_gb = false;
    bool truncated = false;
};

namespace detail {

struct LTIndex {
    // per component: (monomial, basis index), insertion order
    std::vector<std::vector<std::pair<Monomial, std::size_t>>> slots;

    explicit LTIndex(std::size_t rank) : slots(rank) {}
    void add(const ModTerm& t, std::size_t idx) { slots[t.comp].push_back({t.m, idx}); }
    /// First basis element whose leading term divides (comp, m); -1 if none.
    long find(std::size_t comp, const Monomial& m) const {
        for (const auto& [lm, idx] : slots[comp])
            if (divides(lm, m)) return static_cast<long>(idx);
        return -1;
    }
};

}  // namespace detail

/// Full normal form: the result has no term divisible by a leading term of
/// `basis`. The basis is expected to already contain the quotient-relation
/// closure when reduction modulo R = S/I is intended.
inline Vec normal_form(const Ring& R, const ModuleOrder& ord, Vec v, const std::vector<Vec>& basis) {
    detail::LTIndex idx(v.rank());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!basis[i].is_zero()) idx.add(leading_term(basis[i], ord), i);
    Vec out(v.rank());
    while (!v.is_zero()) {
        ModTerm t = leading_term(v, ord);
        long j = idx.find(t.comp, t.m);
        if (j >= 0) {
            const Vec& g = basis[static_cast<std::size_t>(j)];
            ModTerm lg = leading_term(g, ord);
            Monomial q = quotient(t.m, lg.m);
            std::uint32_t c = R.field.div(t.c, lg.c);
            v = vec_sub(R, v, vec_mul_term(R, g, q, c));
        } else {
            // head term is irreducible; move it to the result
            out.comp[t.comp] = poly_add(R, out.comp[t.comp], poly_term(R, t.m, t.c));
            v.comp[t.comp].terms.erase(v.comp[t.comp].terms.begin());
        }
    }
    return out;
}

namespace detail {

struct Pair {
    std::size_t i, j;
    Monomial l;
    std::size_t comp;
    int deg;
    std::uint64_t seq;
};

struct GBState {
    std::vector<Vec> basis;   // monic, no zero elements
    std::vector<ModTerm> lt;  // cached leading terms
    bool truncated = false;
};

inline int pair_degree(const Layout& L, const Monomial& l, std::size_t comp) {
    return l.degree() + L.deg_shift[comp];
}

/// Buchberger completion. `frozen` leading elements are assumed to already be
/// a Groebner basis (no pairs among themselves are scheduled).
inline GBState buchberger(const Ring& R, const Layout& L, const ModuleOrder& ord,
                          const std::vector<Vec>& frozen, const std::vector<Vec>& fresh,
                          const GBOptions& opts) {
    GBState st;
    std::uint64_t seq = 0;
    // (deg, seq)-ordered queue: normal strategy, FIFO within a degree
    auto cmp = [](const Pair& a, const Pair& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.seq < b.seq;
    };
    std::multiset<Pair, decltype(cmp)> queue(cmp);
    std::set<std::pair<std::size_t, std::size_t>> settled;  // S-vector known to reduce to 0
    bool rank1 = L.rank() == 1;

    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

    auto schedule = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            if (st.lt[i].comp != st.lt[n].comp) continue;
            if (rank1 && coprime(st.lt[i].m, st.lt[n].m)) {
                settled.insert(key(i, n));  // product criterion (ideal case only)
                continue;
            }
            Monomial l = lcm(st.lt[i].m, st.lt[n].m);
            int d = pair_degree(L, l, st.lt[n].comp);
            if (d > opts.degree_cap) {
                st.truncated = true;
                continue;
            }
            queue.insert(Pair{i, n, l, st.lt[n].comp, d, seq++});
        }
    };

    auto insert_elem = [&](Vec v) {
        v = normal_form(R, ord, std::move(v), st.basis);
        if (v.is_zero()) return;
        v = vec_monic(R, v, ord);
        st.basis.push_back(std::move(v));
        st.lt.push_back(leading_term(st.basis.back(), ord));
        schedule(st.basis.size() - 1);
    };

    std::size_t nfrozen = 0;
    for (const Vec& g : frozen) {
        if (g.is_zero()) continue;
        st.basis.push_back(vec_monic(R, g, ord));
        st.lt.push_back(leading_term(st.basis.back(), ord));
        ++nfrozen;
    }
    // pairs among frozen elements are settled by assumption
    for (std::size_t i = 0; i < nfrozen; ++i)
        for (std::size_t j = i + 1; j < nfrozen; ++j) settled.insert({i, j});

    for (const Vec& g : fresh) {
        if (g.is_zero()) continue;
        if (opts.graded && !vec_is_homogeneous(L, g))
            throw InputError("inhomogeneous generator in graded mode");
        insert_elem(g);
    }

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        // chain criterion, conservative form: both companion pairs must have
        // genuinely settled
        bool skip = false;
        for (std::size_t k = 0; k < st.basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j || st.lt[k].comp != p.comp) continue;
            if (divides(st.lt[k].m, p.l) && settled.count(key(p.i, k)) && settled.count(key(p.j, k)))
                skip = true;
        }
        if (skip) continue;
        Vec s = vec_sub(R, vec_mul_term(R, st.basis[p.i], quotient(p.l, st.lt[p.i].m), 1),
                        vec_mul_term(R, st.basis[p.j], quotient(p.l, st.lt[p.j].m), 1));
        settled.insert(key(p.i, p.j));
        insert_elem(std::move(s));
    }
    return st;
}

/// Minimalize + tail-reduce + monic + deterministic sort.
inline std::vector<Vec> reduce_basis(const Ring& R, const Layout& L, const ModuleOrder& ord,
                                     std::vector<Vec> basis) {
    // drop elements whose leading term is divisible by another's
    std::vector<ModTerm> lts;
    lts.reserve(basis.size());
    for (const auto& v : basis) lts.push_back(leading_term(v, ord));
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j] || lts[j].comp != lts[i].comp) continue;
            if (lts[j].m == lts[i].m && lts[j].comp == lts[i].comp) {
                if (j < i) keep[i] = false;
                continue;
            }
            if (divides(lts[j].m, lts[i].m)) keep[i] = false;
        }
    }
    std::vector<Vec> out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) out.push_back(std::move(basis[i]));

    // tail reduction to the unique reduced basis
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::vector<Vec> others;
            for (std::size_t j = 0; j < out.size(); ++j)
                if (j != i) others.push_back(out[j]);
            Vec r = normal_form(R, ord, out[i], others);
            r = vec_monic(R, r, ord);
            if (r != out[i]) {
                out[i] = std::move(r);
                changed = true;
            }
        }
    }

    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
        ModTerm ta = leading_term(a, ord), tb = leading_term(b, ord);
        int da = ta.m.degree() + L.deg_shift[ta.comp], db = tb.m.degree() + L.deg_shift[tb.comp];
        if (da != db) return da < db;
        return ord.cmp(ta.comp, ta.m, tb.comp, tb.m) < 0;
    });
    return out;
}

}  // namespace detail

/// Quotient relations i*e_r for every reduced-GB element i of the defining
/// ideal and every basis component.
inline std::vector<Vec> quotient_relations(const QuotientRing& R, const Layout& L) {
    std::vector<Vec> rels;
    for (std::size_t r = 0; r < L.rank(); ++r)
        for (const Poly& g : R.ideal_gb) rels.push_back(vec_unit(R.ring, L.rank(), r, g));
    return rels;
}

/// Reduced Groebner basis of <gens> + I*F under the layout's module order.
inline SubBasis groebner_basis(const QuotientRing& R, const Layout& L, const ModuleOrder& ord,
                               const std::vector<Vec>& gens, const GBOptions& opts = {}) {
    for (const Vec& g : gens)
        if (g.rank() != L.rank()) throw InputError("generator rank does not match layout");
    auto st = detail::buchberger(R.ring, L, ord, quotient_relations(R, L), gens, opts);
    SubBasis b;
    b.layout = L;
    b.order = ord;
    b.elems = detail::reduce_basis(R.ring, L, ord, std::move(st.basis));
    b.is_reduced_gb = true;
    b.truncated = st.truncated || R.truncated;
    return b;
}

/// Extends a known Groebner basis with new generators (pairs among the old
/// elements are not rescheduled).
inline SubBasis gb_extend(const QuotientRing& R, const SubBasis& base, const std::vector<Vec>& gens,
                          const GBOptions& opts = {}) {
    if (!base.is_reduced_gb) throw ContractError("gb_extend requires a Groebner basis");
    auto st = detail::buchberger(R.ring, base.layout, base.order, base.elems, gens, opts);
    SubBasis b;
    b.layout = base.layout;
    b.order = base.order;
    b.elems = detail::reduce_basis(R.ring, base.layout, base.order, std::move(st.basis));
    b.is_reduced_gb = true;
    b.truncated = st.truncated || base.truncated;
    return b;
}

inline Vec normal_form(const QuotientRing& R, const SubBasis& B, const Vec& v) {
    if (v.rank() != B.layout.rank()) throw InputError("vector rank does not match basis layout");
    return normal_form(R.ring, B.order, v, B.elems);
}

inline bool is_member(const QuotientRing& R, const SubBasis& B, const Vec& v) {
    if (!B.is_reduced_gb) throw ContractError("membership test requires a Groebner basis");
    return normal_form(R, B, v).is_zero();
}

/// Normal form of a scalar polynomial against the defining ideal.
inline Poly poly_normal_form(const QuotientRing& R, const Poly& f) {
    if (R.ideal_gb.empty()) return f;
    Layout L = Layout::plain(1);
    ModuleOrder ord(L, R.ring.order);
    Vec v(1);
    v.comp[0] = f;
    std::vector<Vec> basis;
    for (const Poly& g : R.ideal_gb) basis.push_back(vec_unit(R.ring, 1, 0, g));
    return normal_form(R.ring, ord, v, basis).comp[0];
}

inline bool poly_is_zero_in_R(const QuotientRing& R, const Poly& f) {
    return poly_normal_form(R, f).is_zero();
}

inline bool vec_is_zero_in_R(const QuotientRing& R, const Vec& v) {
    for (const auto& f : v.comp)
        if (!poly_is_zero_in_R(R, f)) return false;
    return true;
}

/// Elements of the basis that are nonzero in R (drops the pure quotient part).
inline std::vector<Vec> r_generators(const QuotientRing& R, const SubBasis& B) {
    std::vector<Vec> out;
    for (const Vec& v : B.elems)
        if (!vec_is_zero_in_R(R, v)) out.push_back(v);
    return out;
}

/// Builds R = S/I with the reduced Groebner basis of I.
inline QuotientRing quotient_ring(Ring S, std::vector<Poly> ideal_gens, const GBOptions& opts = {}) {
    QuotientRing R;
    R.ring = std::move(S);
    R.ideal = std::move(ideal_gens);
    R.graded = true;
    for (const Poly& f : R.ideal)
        if (!f.is_homogeneous()) R.graded = false;

    QuotientRing free;  // plain polynomial ring for the scalar computation
    free.ring = R.ring;
    Layout L = Layout::plain(1);
    ModuleOrder ord(L, R.ring.order);
    std::vector<Vec> gens;
    for (const Poly& f : R.ideal) gens.push_back(vec_unit(R.ring, 1, 0, f));
    GBOptions o = opts;
    o.graded = false;  // allow inhomogeneous defining ideals (tangent-cone path)
    SubBasis b = groebner_basis(free, L, ord, gens, o);
    for (const Vec& v : b.elems) R.ideal_gb.push_back(v.comp[0]);
    R.truncated = b.truncated;
    return R;
}

/// Kernel of the map defined by mapping the basis of `dom_layout` to `cols`
/// (vectors in `cod_layout`), as a submodule basis in the domain. Equally the
/// syzygy module of `cols` when dom_layout carries their degrees/valuations.
inline SubBasis syzygies(const QuotientRing& R, const Layout& cod_layout, const ModuleOrder& cod_ord,
                         const std::vector<Vec>& cols, const Layout& dom_layout,
                         const GBOptions& opts = {}) {
    if (cols.size() != dom_layout.rank()) throw InputError("column count does not match domain layout");
    std::size_t nc = cod_layout.rank(), nd = dom_layout.rank();
    std::vector<int> deg(cod_layout.deg_shift), val(cod_layout.val_shift);
    deg.insert(deg.end(), dom_layout.deg_shift.begin(), dom_layout.deg_shift.end());
    val.insert(val.end(), dom_layout.val_shift.begin(), dom_layout.val_shift.end());
    Layout aug(deg, val);
    ModuleOrder aug_ord(aug, cod_ord.mono, nc);

    std::vector<Vec> inputs;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].rank() != nc) throw InputError("column rank does not match codomain layout");
        Vec v(nc + nd);
        for (std::size_t r = 0; r < nc; ++r) v.comp[r] = cols[j].comp[r];
        v.comp[nc + j] = poly_const(R.ring, 1);
        inputs.push_back(std::move(v));
    }
    SubBasis gb = groebner_basis(R, aug, aug_ord, inputs, opts);

    SubBasis out;
    out.layout = dom_layout;
    out.order = ModuleOrder(dom_layout, cod_ord.mono);
    out.is_reduced_gb = true;
    out.truncated = gb.truncated;
    for (const Vec& v : gb.elems) {
        bool head_zero = true;
        for (std::size_t r = 0; r < nc && head_zero; ++r)
            if (!v.comp[r].is_zero()) head_zero = false;
        if (!head_zero) continue;
        Vec w(nd);
        for (std::size_t j = 0; j < nd; ++j) w.comp[j] = v.comp[nc + j];
        out.elems.push_back(std::move(w));
    }
    return out;
}

/// Syzygy basis of a Groebner basis' R-generators; the new layout carries the
/// generators' degrees (and valuations).
inline SubBasis syzygy_basis(const QuotientRing& R, const SubBasis& B, const GBOptions& opts = {}) {
    if (!B.is_reduced_gb) throw ContractError("syzygy_basis requires a Groebner basis");
    std::vector<Vec> gens = r_generators(R, B);
    std::vector<int> deg, val;
    for (const Vec& g : gens) {
        deg.push_back(vec_degree(B.layout, g));
        int v = valuation(B.layout, g);
        val.push_back(v == kInfinity ? 0 : v);
    }
    return syzygies(R, B.layout, B.order, gens, Layout(deg, val), opts);
}

/// Every S-vector of the basis (quotient relations included) reduces to zero.
inline bool buchberger_criterion_holds(const QuotientRing& R, const SubBasis& B) {
    std::vector<Vec> all = B.elems;
    for (Vec& q : quotient_relations(R, B.layout)) all.push_back(std::move(q));
    std::vector<ModTerm> lts;
    for (const Vec& v : all) {
        Vec nf = normal_form(R.ring, B.order, v, B.elems);
        if (!nf.is_zero()) return false;  // quotient relations must be in the span
    }
    for (const Vec& v : B.elems) lts.push_back(leading_term(v, B.order));
    for (std::size_t i = 0; i < B.elems.size(); ++i)
        for (std::size_t j = i + 1; j < B.elems.size(); ++j) {
            if (lts[i].comp != lts[j].comp) continue;
            Monomial l = lcm(lts[i].m, lts[j].m);
            Vec s = vec_sub(R.ring,
                            vec_mul_term(R.ring, B.elems[i], quotient(l, lts[i].m),
                                         R.ring.field.inv(lts[i].c)),
                            vec_mul_term(R.ring, B.elems[j], quotient(l, lts[j].m),
                                         R.ring.field.inv(lts[j].c)));
            if (!normal_form(R.ring, B.order, s, B.elems).is_zero()) return false;
        }
    return true;
}

}  // namespace grfilt
