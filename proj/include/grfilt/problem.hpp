#pragma once

#include "report.hpp"

namespace grfilt {

/// Parsed and validated CLI input: ring data, module presentation, optional
/// filtration chain, and options.
struct ProblemSpec {
    QuotientRing R;            // graded quotient ring (graded mode)
    Ring S;                    // ambient polynomial ring
    std::vector<Poly> ideal;   // defining ideal generators as given
    bool local = false;        // tangent-cone mode (cyclic local input)
    Presentation module;
    std::vector<Poly> local_relations;  // cyclic relations (local mode)
    std::vector<FiltrationStep> filtration;
    bool has_filtration = false;
    ResolveOptions options;
    int ld_margin = 3;
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& pointer, const std::string& msg) {
    throw InputError(pointer + ": " + msg);
}

inline int get_int(const json& j, const std::string& ptr, const std::string& key, int fallback,
                   bool required = false) {
    if (!j.contains(key)) {
        if (required) schema_error(ptr + "/" + key, "missing required field");
        return fallback;
    }
    if (!j[key].is_number_integer()) schema_error(ptr + "/" + key, "expected an integer");
    return j[key].get<int>();
}

}  // namespace detail

/// Builds a ProblemSpec from the JSON input format. Throws InputError with a
/// JSON-pointer-style path on schema violations.
inline ProblemSpec parse_problem(const json& j) {
    using detail::schema_error;
    ProblemSpec spec;
    if (!j.is_object()) schema_error("", "input must be a JSON object");

    std::uint32_t p = 32003;
    if (j.contains("field")) {
        if (!j["field"].is_object()) schema_error("/field", "expected an object");
        p = static_cast<std::uint32_t>(detail::get_int(j["field"], "/field", "characteristic", 32003));
    }
    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
        schema_error("/variables", "expected a non-empty array of variable names");
    spec.S.field = PrimeField(p);
    for (std::size_t i = 0; i < j["variables"].size(); ++i) {
        if (!j["variables"][i].is_string())
            schema_error("/variables/" + std::to_string(i), "expected a string");
        spec.S.vars.push_back(j["variables"][i].get<std::string>());
    }

    if (j.contains("options")) {
        const json& o = j["options"];
        spec.options.n_max = detail::get_int(o, "/options", "n_max", 8);
        spec.options.degree_cap = detail::get_int(o, "/options", "degree_cap", 24);
        spec.ld_margin = detail::get_int(o, "/options", "ld_margin", 3);
        if (o.contains("order")) {
            std::string ord = o["order"].get<std::string>();
            if (ord == "degrevlex")
                spec.S.order = OrderKind::degrevlex;
            else if (ord == "deglex")
                spec.S.order = OrderKind::deglex;
            else
                schema_error("/options/order", "expected \"degrevlex\" or \"deglex\"");
        }
        if (spec.options.n_max < 0) schema_error("/options/n_max", "must be >= 0");
        if (spec.options.degree_cap < 1) schema_error("/options/degree_cap", "must be >= 1");
    }

    if (j.contains("mode")) {
        std::string m = j["mode"].get<std::string>();
        if (m == "local")
            spec.local = true;
        else if (m != "graded")
            schema_error("/mode", "expected \"graded\" or \"local\"");
    }

    auto parse_at = [&](const std::string& ptr, const json& v) {
        if (!v.is_string()) schema_error(ptr, "expected a polynomial string");
        try {
            return parse_poly(spec.S, v.get<std::string>());
        } catch (const ParseError& e) {
            schema_error(ptr, e.what());
        }
    };

    if (j.contains("ideal")) {
        if (!j["ideal"].is_array()) schema_error("/ideal", "expected an array");
        for (std::size_t i = 0; i < j["ideal"].size(); ++i)
            spec.ideal.push_back(parse_at("/ideal/" + std::to_string(i), j["ideal"][i]));
    }

    GBOptions gb = spec.options.gb();
    gb.graded = false;
    spec.R = quotient_ring(spec.S, spec.ideal, gb);
    if (!spec.local && !spec.R.graded)
        schema_error("/ideal", "graded mode requires a homogeneous defining ideal");

    if (!j.contains("module")) schema_error("/module", "missing required field");
    const json& m = j["module"];
    if (!m.is_object()) schema_error("/module", "expected an object");
    int rank = detail::get_int(m, "/module", "rank", 1, true);
    if (rank < 0) schema_error("/module/rank", "must be >= 0");
    std::vector<int> deg(static_cast<std::size_t>(rank), 0), val(static_cast<std::size_t>(rank), 0);
    auto read_shifts = [&](const char* key, std::vector<int>& out) {
        if (!m.contains(key)) return;
        if (!m[key].is_array() || m[key].size() != static_cast<std::size_t>(rank))
            schema_error(std::string("/module/") + key, "expected an array of length rank");
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = m[key][i].get<int>();
    };
    read_shifts("degree_shifts", deg);
    read_shifts("valuation_shifts", val);
    for (std::size_t i = 0; i < val.size(); ++i)
        if (val[i] < 0) schema_error("/module/valuation_shifts/" + std::to_string(i), "must be >= 0");
    spec.module.F = Layout(deg, val);

    if (m.contains("relations")) {
        if (!m["relations"].is_array()) schema_error("/module/relations", "expected an array");
        for (std::size_t r = 0; r < m["relations"].size(); ++r) {
            const json& rv = m["relations"][r];
            std::string ptr = "/module/relations/" + std::to_string(r);
            if (spec.local) {
                // cyclic local input: relations are single polynomials
                if (rank != 1) schema_error("/module/rank", "local mode requires a cyclic module");
                if (rv.is_string()) {
                    spec.local_relations.push_back(parse_at(ptr, rv));
                    continue;
                }
            }
            if (!rv.is_array() || rv.size() != static_cast<std::size_t>(rank))
                schema_error(ptr, "expected an array of length rank");
            Vec v(static_cast<std::size_t>(rank));
            for (std::size_t c = 0; c < rv.size(); ++c)
                v.comp[c] = parse_at(ptr + "/" + std::to_string(c), rv[c]);
            if (spec.local)
                spec.local_relations.push_back(v.comp[0]);
            else {
                if (!vec_is_homogeneous(spec.module.F, v))
                    schema_error(ptr, "relation is not homogeneous for the degree shifts");
                spec.module.rels.push_back(std::move(v));
            }
        }
    }

    if (j.contains("filtration")) {
        if (spec.local) schema_error("/filtration", "not supported in local mode");
        if (!spec.module.rels.empty())
            schema_error("/filtration", "a filtration chain replaces module relations");
        if (!j["filtration"].is_array()) schema_error("/filtration", "expected an array of steps");
        for (std::size_t s = 0; s < j["filtration"].size(); ++s) {
            const json& st = j["filtration"][s];
            std::string ptr = "/filtration/" + std::to_string(s);
            FiltrationStep step;
            step.valuation = detail::get_int(st, ptr, "valuation", static_cast<int>(s));
            if (!st.contains("generators") || !st["generators"].is_array())
                schema_error(ptr + "/generators", "expected an array of vectors");
            for (std::size_t g = 0; g < st["generators"].size(); ++g) {
                const json& gv = st["generators"][g];
                std::string gptr = ptr + "/generators/" + std::to_string(g);
                if (!gv.is_array() || gv.size() != spec.module.F.rank())
                    schema_error(gptr, "expected an array of length rank");
                Vec v(spec.module.F.rank());
                for (std::size_t c = 0; c < gv.size(); ++c)
                    v.comp[c] = parse_at(gptr + "/" + std::to_string(c), gv[c]);
                step.gens.push_back(std::move(v));
            }
            spec.filtration.push_back(std::move(step));
        }
        spec.has_filtration = true;
    }
    return spec;
}

inline ProblemSpec parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(j);
}

/// The presentation every command operates on. In graded mode this is the
/// module block (or the encoded filtration chain); in local mode it is the
/// cyclic presentation of gr(R/J) over R^g computed through tangent cones.
struct WorkingModule {
    QuotientRing R;           // ring the computation runs over (R or R^g)
    Presentation P;
    std::vector<Poly> initial_ideal;      // I* (local mode)
    std::vector<Poly> initial_relations;  // J* preimage ideal (local mode)
    bool truncated = false;
};

inline WorkingModule working_module(const ProblemSpec& spec) {
    WorkingModule w;
    if (!spec.local) {
        w.R = spec.R;
        if (spec.has_filtration) {
            FiltrationValidation fv =
                validate_filtration(spec.R, spec.module.F, spec.filtration, spec.options.gb());
            if (!fv.valid) throw InputError("/filtration: " + fv.message);
            if (!fv.encodable) throw InputError("/filtration: " + fv.message);
            w.P = fv.presentation;
        } else {
            w.P = spec.module;
        }
        return w;
    }
    // local cyclic mode: everything happens over R^g = S/I*
    GBOptions gb = spec.options.gb();
    gb.graded = false;
    TangentCone istar = tangent_cone(spec.S, spec.ideal, gb);
    std::vector<Poly> full = spec.ideal;
    for (const Poly& f : spec.local_relations) full.push_back(f);
    TangentCone lstar = tangent_cone(spec.S, full, gb);
    w.initial_ideal = istar.gens;
    w.initial_relations = lstar.gens;
    w.truncated = istar.truncated || lstar.truncated;
    w.R = quotient_ring(spec.S, istar.gens, spec.options.gb());
    w.P.F = Layout::plain(1);
    for (const Poly& g : lstar.gens) {
        Poly nf = poly_normal_form(w.R, g);
        if (!nf.is_zero()) w.P.rels.push_back(vec_unit(spec.S, 1, 0, nf));
    }
    return w;
}

}  // namespace grfilt
