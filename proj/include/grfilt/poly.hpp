#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fp.hpp"
#include "monomial.hpp"

namespace grfilt {

/// Sentinel for the order/valuation of 0.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Polynomial ring context: coefficient field, named variables, active
/// monomial order. Polynomials only carry data; every operation takes the
/// ring it lives in.
struct Ring {
    PrimeField field;
    std::vector<std::string> vars;
    OrderKind order = OrderKind::degrevlex;

    std::size_t nvars() const { return vars.size(); }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

struct Term {
    Monomial m;
    std::uint32_t c;  // nonzero, canonical in [0, p)
};

/// Sparse polynomial over F_p. Terms are kept sorted descending under the
/// ring's monomial order, with no zero coefficients and no duplicates, so the
/// leading term is terms.front().
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lt() const {
        if (terms.empty()) throw DomainError("leading term of zero polynomial");
        return terms.front();
    }
    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms) d = std::max(d, t.m.degree());
        return d;
    }
    /// Minimal term degree (the m-adic order); kInfinity for 0.
    int ord() const {
        int d = kInfinity;
        for (const auto& t : terms) d = std::min(d, t.m.degree());
        return d;
    }
    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int d = terms.front().m.degree();
        for (const auto& t : terms)
            if (t.m.degree() != d) return false;
        return true;
    }
    bool operator==(const Poly& o) const {
        if (terms.size() != o.terms.size()) return false;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (terms[i].c != o.terms[i].c || terms[i].m != o.terms[i].m) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

inline Poly poly_zero() { return {}; }

inline Poly poly_const(const Ring& R, std::int64_t c) {
    Poly f;
    std::uint32_t r = R.field.reduce(c);
    if (r) f.terms.push_back({Monomial(R.nvars()), r});
    return f;
}

inline Poly poly_term(const Ring& R, Monomial m, std::int64_t c) {
    Poly f;
    std::uint32_t r = R.field.reduce(c);
    if (r) f.terms.push_back({std::move(m), r});
    return f;
}

inline Poly poly_var(const Ring& R, std::size_t i, int exp = 1) {
    Monomial m(R.nvars());
    m.e[i] = exp;
    return poly_term(R, m, 1);
}

/// Restores the sorted/unique/nonzero invariant after bulk term edits.
inline void poly_normalize(const Ring& R, Poly& f) {
    std::sort(f.terms.begin(), f.terms.end(),
              [&](const Term& a, const Term& b) { return mono_cmp(a.m, b.m, R.order) > 0; });
    std::vector<Term> out;
    out.reserve(f.terms.size());
    for (auto& t : f.terms) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = R.field.add(out.back().c, t.c);
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    f.terms = std::move(out);
}

inline void require_same_variables(const Poly& f, const Poly& g) {
    if (!f.terms.empty() && !g.terms.empty() &&
        f.terms[0].m.e.size() != g.terms[0].m.e.size())
        throw InputError("polynomials live over different variable sets");
}

inline Poly poly_add(const Ring& R, const Poly& f, const Poly& g) {
    require_same_variables(f, g);
    Poly r;
    r.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = mono_cmp(f.terms[i].m, g.terms[j].m, R.order);
        if (c > 0)
            r.terms.push_back(f.terms[i++]);
        else if (c < 0)
            r.terms.push_back(g.terms[j++]);
        else {
            std::uint32_t s = R.field.add(f.terms[i].c, g.terms[j].c);
            if (s) r.terms.push_back({f.terms[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

inline Poly poly_neg(const Ring& R, const Poly& f) {
    Poly r = f;
    for (auto& t : r.terms) t.c = R.field.neg(t.c);
    return r;
}

inline Poly poly_sub(const Ring& R, const Poly& f, const Poly& g) {
    return poly_add(R, f, poly_neg(R, g));
}

inline Poly poly_scale(const Ring& R, const Poly& f, std::uint32_t c) {
    if (c == 0) return {};
    Poly r = f;
    for (auto& t : r.terms) t.c = R.field.mul(t.c, c);
    return r;
}

/// f * (c * m) for a single term.
inline Poly poly_mul_term(const Ring& R, const Poly& f, const Monomial& m, std::uint32_t c) {
    if (c == 0) return {};
    Poly r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) r.terms.push_back({t.m * m, R.field.mul(t.c, c)});
    return r;  // multiplying by a fixed monomial preserves the term order
}

inline Poly poly_mul(const Ring& R, const Poly& f, const Poly& g) {
    require_same_variables(f, g);
    Poly r;
    r.terms.reserve(f.terms.size() * g.terms.size());
    for (const auto& a : f.terms)
        for (const auto& b : g.terms) r.terms.push_back({a.m * b.m, R.field.mul(a.c, b.c)});
    poly_normalize(R, r);
    return r;
}

inline Poly poly_monic(const Ring& R, const Poly& f) {
    if (f.is_zero()) return f;
    return poly_scale(R, f, R.field.inv(f.lt().c));
}

/// Sum of the terms of a given total degree.
inline Poly poly_homogeneous_part(const Poly& f, int deg) {
    Poly r;
    for (const auto& t : f.terms)
        if (t.m.degree() == deg) r.terms.push_back(t);
    return r;
}

/// Lowest-degree homogeneous part (the initial form for the m-adic
/// filtration); 0 for 0.
inline Poly poly_lowest_form(const Poly& f) {
    if (f.is_zero()) return f;
    return poly_homogeneous_part(f, f.ord());
}

}  // namespace grfilt
