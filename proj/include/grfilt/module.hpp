#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "parse.hpp"
#include "poly.hpp"

namespace grfilt {

/// Layout of a shifted free module ⊕ R(-a'_i) with a special filtration
/// F_p = ⊕ m^(p-v_i) e_i given by valuation shifts v_i >= 0. Basis element
/// e_i has degree deg_shift[i] and valuation val_shift[i].
struct Layout {
    std::vector<int> deg_shift;
    std::vector<int> val_shift;

    Layout() = default;
    Layout(std::vector<int> deg, std::vector<int> val)
        : deg_shift(std::move(deg)), val_shift(std::move(val)) {
        if (deg_shift.size() != val_shift.size()) throw InputError("layout shift lists differ in length");
        for (int v : val_shift)
            if (v < 0) throw InputError("valuation shifts must be non-negative");
    }
    static Layout plain(std::size_t rank, int deg = 0) {
        return Layout(std::vector<int>(rank, deg), std::vector<int>(rank, 0));
    }

    std::size_t rank() const { return deg_shift.size(); }
    int weight(std::size_t i) const { return deg_shift[i] - val_shift[i]; }

    bool operator==(const Layout& o) const {
        return deg_shift == o.deg_shift && val_shift == o.val_shift;
    }

    /// Layout of the associated graded free module: degrees become the
    /// valuation shifts.
    Layout graded_side() const { return Layout(val_shift, val_shift); }
};

/// Element of a shifted free module: one polynomial per basis component.
struct Vec {
    std::vector<Poly> comp;

    Vec() = default;
    explicit Vec(std::size_t rank) : comp(rank) {}

    std::size_t rank() const { return comp.size(); }
    bool is_zero() const {
        for (const auto& f : comp)
            if (!f.is_zero()) return false;
        return true;
    }
    bool operator==(const Vec& o) const { return comp == o.comp; }
    bool operator!=(const Vec& o) const { return !(*this == o); }
};

inline Vec vec_unit(const Ring& R, std::size_t rank, std::size_t i, Poly f) {
    (void)R;
    Vec v(rank);
    v.comp[i] = std::move(f);
    return v;
}

inline Vec vec_add(const Ring& R, const Vec& a, const Vec& b) {
    if (a.rank() != b.rank()) throw InputError("vector rank mismatch");
    Vec r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.comp[i] = poly_add(R, a.comp[i], b.comp[i]);
    return r;
}

inline Vec vec_sub(const Ring& R, const Vec& a, const Vec& b) {
    if (a.rank() != b.rank()) throw InputError("vector rank mismatch");
    Vec r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.comp[i] = poly_sub(R, a.comp[i], b.comp[i]);
    return r;
}

inline Vec vec_neg(const Ring& R, const Vec& a) {
    Vec r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.comp[i] = poly_neg(R, a.comp[i]);
    return r;
}

inline Vec vec_scale(const Ring& R, const Vec& a, std::uint32_t c) {
    Vec r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.comp[i] = poly_scale(R, a.comp[i], c);
    return r;
}

inline Vec vec_mul_term(const Ring& R, const Vec& a, const Monomial& m, std::uint32_t c) {
    Vec r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.comp[i] = poly_mul_term(R, a.comp[i], m, c);
    return r;
}

inline Vec vec_mul_poly(const Ring& R, const Vec& a, const Poly& f) {
    Vec r(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) r.comp[i] = poly_mul(R, a.comp[i], f);
    return r;
}

/// Degree of a homogeneous vector (component degree + shift); kInfinity for 0.
/// Throws if the components are not compatible with a single degree.
inline int vec_degree(const Layout& L, const Vec& v) {
    int d = kInfinity;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        const Poly& f = v.comp[i];
        if (f.is_zero()) continue;
        if (!f.is_homogeneous()) throw InputError("vector component is not homogeneous");
        int di = f.degree() + L.deg_shift[i];
        if (d != kInfinity && di != d) throw InputError("vector is not homogeneous");
        d = di;
    }
    return d;
}

inline bool vec_is_homogeneous(const Layout& L, const Vec& v) {
    int d = kInfinity;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        const Poly& f = v.comp[i];
        if (f.is_zero()) continue;
        if (!f.is_homogeneous()) return false;
        int di = f.degree() + L.deg_shift[i];
        if (d != kInfinity && di != d) return false;
        d = di;
    }
    return true;
}

/// Valuation of a vector under the special filtration:
/// min over nonzero components of ord(c_i) + v_i; kInfinity for 0.
inline int valuation(const Layout& L, const Vec& v) {
    int p = kInfinity;
    for (std::size_t i = 0; i < v.rank(); ++i)
        if (!v.comp[i].is_zero())
            p = std::min(p, v.comp[i].ord() + L.val_shift[i]);
    return p;
}

/// Initial form gr(c): keeps the lowest form of each component attaining the
/// valuation, zeroes the rest. Lives in the graded-side layout.
inline Vec initial_form(const Ring& R, const Layout& L, const Vec& v) {
    (void)R;
    if (v.is_zero()) throw DomainError("initial form of zero vector");
    int p = valuation(L, v);
    Vec r(v.rank());
    for (std::size_t i = 0; i < v.rank(); ++i) {
        const Poly& f = v.comp[i];
        if (!f.is_zero() && f.ord() + L.val_shift[i] == p) r.comp[i] = poly_lowest_form(f);
    }
    return r;
}

/// Module term order: component weight a'_i - v_i first (larger wins), then
/// the scalar monomial order, then lower component index. An optional
/// elimination boundary makes every term in components < elim_block larger
/// than any term in the tail block.
struct ModuleOrder {
    std::vector<int> weight;
    OrderKind mono = OrderKind::degrevlex;
    std::size_t elim_block = 0;

    ModuleOrder() = default;
    ModuleOrder(const Layout& L, OrderKind kind, std::size_t elim = 0)
        : mono(kind), elim_block(elim) {
        weight.reserve(L.rank());
        for (std::size_t i = 0; i < L.rank(); ++i) weight.push_back(L.weight(i));
    }

    /// Three-way: >0 if term (ca, ma) is larger.
    int cmp(std::size_t ca, const Monomial& ma, std::size_t cb, const Monomial& mb) const {
        if (elim_block) {
            bool ta = ca >= elim_block, tb = cb >= elim_block;
            if (ta != tb) return ta ? -1 : 1;
        }
        if (weight[ca] != weight[cb]) return weight[ca] > weight[cb] ? 1 : -1;
        int c = mono_cmp(ma, mb, mono);
        if (c) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }
};

struct ModTerm {
    std::size_t comp;
    Monomial m;
    std::uint32_t c;
};

/// Maximal term of a nonzero vector under the module order.
inline ModTerm leading_term(const Vec& v, const ModuleOrder& ord) {
    std::optional<ModTerm> best;
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (v.comp[i].is_zero()) continue;
        const Term& t = v.comp[i].lt();
        if (!best || ord.cmp(i, t.m, best->comp, best->m) > 0) best = ModTerm{i, t.m, t.c};
    }
    if (!best) throw DomainError("leading term of zero vector");
    return *best;
}

inline Vec vec_monic(const Ring& R, const Vec& v, const ModuleOrder& ord) {
    if (v.is_zero()) return v;
    return vec_scale(R, v, R.field.inv(leading_term(v, ord).c));
}

inline std::string vec_to_string(const Ring& R, const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.rank(); ++i) {
        if (i) s += ", ";
        s += poly_to_string(R, v.comp[i]);
    }
    return s + ")";
}

}  // namespace grfilt
