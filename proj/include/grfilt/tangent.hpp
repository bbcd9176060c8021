#pragma once

#include "groebner.hpp"

namespace grfilt {

struct TangentCone {
    std::vector<Poly> gens;  // reduced Groebner basis of the initial ideal in S
    bool truncated = false;
};

namespace detail {

/// Graded order that prefers higher powers of the homogenization variable
/// inside a degree: deglex with t declared first. Leading terms of
/// homogeneous polynomials then select the lowest x-forms.
inline Ring homogenization_ring(const Ring& S) {
    Ring St;
    St.field = S.field;
    St.vars.push_back("__h");
    for (const auto& v : S.vars) St.vars.push_back(v);
    St.order = OrderKind::deglex;
    return St;
}

inline Poly homogenize(const Ring& S, const Ring& St, const Poly& f) {
    int D = f.degree();
    Poly out;
    for (const auto& t : f.terms) {
        Monomial m(St.nvars());
        m.e[0] = D - t.m.degree();
        for (std::size_t i = 0; i < S.nvars(); ++i) m.e[i + 1] = t.m.e[i];
        out.terms.push_back({std::move(m), t.c});
    }
    poly_normalize(St, out);
    return out;
}

inline Poly dehomogenize(const Ring& St, const Ring& S, const Poly& f) {
    (void)St;
    Poly out;
    for (const auto& t : f.terms) {
        Monomial m(S.nvars());
        for (std::size_t i = 0; i < S.nvars(); ++i) m.e[i] = t.m.e[i + 1];
        out.terms.push_back({std::move(m), t.c});
    }
    poly_normalize(S, out);
    return out;
}

}  // namespace detail

/// Initial ideal of lowest-degree forms (the tangent cone at the origin),
/// computed by the homogenization-variable method: homogenize the generators,
/// take a Groebner basis under an order ranking higher t-powers first, then
/// dehomogenize and keep lowest forms.
inline TangentCone tangent_cone(const Ring& S, const std::vector<Poly>& gens,
                                const GBOptions& opts = {}) {
    Ring St = detail::homogenization_ring(S);
    Layout L = Layout::plain(1);
    ModuleOrder ord(L, St.order);
    QuotientRing free_St;
    free_St.ring = St;
    std::vector<Vec> input;
    for (const Poly& f : gens)
        if (!f.is_zero()) input.push_back(vec_unit(St, 1, 0, detail::homogenize(S, St, f)));
    GBOptions o = opts;
    o.graded = true;  // homogenized inputs are honestly graded
    SubBasis gb = groebner_basis(free_St, L, ord, input, o);

    std::vector<Vec> forms;
    for (const Vec& v : gb.elems) {
        Poly g = detail::dehomogenize(St, S, v.comp[0]);
        if (g.is_zero()) continue;
        forms.push_back(vec_unit(S, 1, 0, poly_lowest_form(g)));
    }
    QuotientRing free_S;
    free_S.ring = S;
    SubBasis out = groebner_basis(free_S, L, ModuleOrder(L, S.order), forms, o);
    TangentCone tc;
    for (const Vec& v : out.elems) tc.gens.push_back(v.comp[0]);
    tc.truncated = gb.truncated || out.truncated;
    return tc;
}

}  // namespace grfilt
