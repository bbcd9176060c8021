#pragma once

#include "problem.hpp"

namespace grfilt {

struct CliFlags {
    std::optional<int> steps;
    std::optional<int> degree_cap;
    std::optional<std::string> order;
    bool json_output = false;
};

struct RunResult {
    int exit_code = 0;
    std::string text;
    json output;
};

namespace demos {

inline const char* contro_spec = R"({
  "field": {"characteristic": 32003},
  "variables": ["x", "y"],
  "ideal": ["x^3"],
  "module": {
    "rank": 2,
    "degree_shifts": [1, 0],
    "valuation_shifts": [0, 0],
    "relations": [["x^2", "y^3"]]
  },
  "options": {"n_max": 8, "degree_cap": 24}
})";

inline const char* cyclic_spec = R"({
  "field": {"characteristic": 32003},
  "variables": ["x", "y", "z", "u"],
  "ideal": ["x^3"],
  "mode": "local",
  "module": {
    "rank": 1,
    "relations": ["y^2+x^2", "z^2*y+u^4"]
  },
  "options": {"n_max": 8, "degree_cap": 36}
})";

}  // namespace demos

namespace detail {

inline void apply_flags(ProblemSpec& spec, const CliFlags& flags) {
    if (flags.steps) {
        if (*flags.steps < 0) throw InputError("--steps must be >= 0");
        spec.options.n_max = *flags.steps;
    }
    if (flags.degree_cap) {
        if (*flags.degree_cap < 1) throw InputError("--degree-cap must be >= 1");
        spec.options.degree_cap = *flags.degree_cap;
    }
    if (flags.order) {
        if (*flags.order == "degrevlex")
            spec.S.order = OrderKind::degrevlex;
        else if (*flags.order == "deglex")
            spec.S.order = OrderKind::deglex;
        else
            throw InputError("--order must be degrevlex or deglex");
        spec.R.ring.order = spec.S.order;
        GBOptions gb = spec.options.gb();
        gb.graded = false;
        spec.R = quotient_ring(spec.S, spec.ideal, gb);
    }
}

inline RegularityReport auto_regularity(const QuotientRing& R, const Presentation& P,
                                        const Complex& C, const BettiTable& T,
                                        const ResolveOptions& opts, int margin) {
    RegularityReport rep = regularity(R.ring, T, C);
    if (rep.status != RegStatus::lower_bound) return rep;
    LdReport ld = linearity_defect(R, P, opts.n_max, margin, opts.degree_cap);
    if ((ld.verdict == LdVerdict::koszul || ld.verdict == LdVerdict::certified) &&
        ld.value < opts.n_max)
        return regularity(R.ring, T, C, ld.value);
    return rep;
}

}  // namespace detail

inline RunResult run_on_spec(const std::string& command, ProblemSpec spec, const CliFlags& flags) {
    detail::apply_flags(spec, flags);
    const ResolveOptions& opts = spec.options;
    RunResult res;
    json& out = res.output;
    out["command"] = command;

    WorkingModule w = working_module(spec);
    const QuotientRing& R = w.R;

    if (command == "resolve") {
        Complex C = resolve_minimal(R, w.P, opts);
        out["complex"] = complex_json(R.ring, C);
        out["betti"] = betti_json(betti(C));
        res.text = complex_text(R.ring, C);
    } else if (command == "betti") {
        BettiTable T = betti(resolve_minimal(R, w.P, opts));
        out["betti"] = betti_json(T);
        res.text = betti_text(T);
    } else if (command == "reg") {
        Complex C = resolve_minimal(R, w.P, opts);
        BettiTable T = betti(C);
        RegularityReport rep = detail::auto_regularity(R, w.P, C, T, opts, spec.ld_margin);
        out["regularity"] = regularity_json(rep);
        res.text = regularity_text(rep);
    } else if (command == "gr") {
        if (spec.local) {
            json istar = json::array(), jstar = json::array();
            for (const Poly& g : w.initial_ideal) istar.push_back(poly_to_string(spec.S, g));
            for (const Poly& g : w.initial_relations) jstar.push_back(poly_to_string(spec.S, g));
            out["initial_ideal"] = istar;
            out["initial_relations"] = jstar;
            res.text += "I* = { ";
            for (const Poly& g : w.initial_ideal) res.text += poly_to_string(spec.S, g) + "; ";
            res.text += "}\nJ* = { ";
            for (const Poly& g : w.initial_relations) res.text += poly_to_string(spec.S, g) + "; ";
            res.text += "}\n";
        } else {
            Presentation G = associated_graded(R, w.P, opts.gb());
            json rels = json::array();
            for (const Vec& v : G.rels) rels.push_back(to_json(R.ring, v));
            out["gr_layout"] = layout_json(G.F);
            out["initial_submodule"] = rels;
            res.text += "gr generators: degrees (";
            for (std::size_t i = 0; i < G.F.rank(); ++i)
                res.text += (i ? "," : "") + std::to_string(G.F.deg_shift[i]);
            res.text += ")\nN* = {\n";
            for (const Vec& v : G.rels) res.text += "  " + vec_to_string(R.ring, v) + "\n";
            res.text += "}\n";
        }
    } else if (command == "std-basis") {
        StandardBasis sb = minimal_standard_basis(R, w.P.F, w.P.rels, opts.gb());
        StandardBasisCheck chk = is_standard_basis(R, w.P.F, w.P.rels, w.P.rels, opts.gb());
        out["minimal_standard_basis"] = standard_basis_json(R.ring, sb);
        out["input_is_standard_basis"] = chk.ok();
        if (chk.witness) out["witness"] = to_json(R.ring, *chk.witness);
        res.text = "minimal standard basis (" + std::to_string(sb.lifts.size()) + " elements):\n";
        for (std::size_t i = 0; i < sb.lifts.size(); ++i)
            res.text += "  " + vec_to_string(R.ring, sb.lifts[i]) + "  (degree " +
                        std::to_string(sb.degrees[i]) + ", valuation " +
                        std::to_string(sb.valuations[i]) + ")\n";
        res.text += std::string("input generators are a standard basis: ") +
                    (chk.ok() ? "yes" : "no") + "\n";
    } else if (command == "filtered-res") {
        FilteredResolutionPair pr = filtered_resolution(R, w.P, opts);
        out["F"] = complex_json(R.ring, pr.F);
        out["G"] = complex_json(R.ring, pr.G);
        bool gr_matches = true;
        for (std::size_t i = 1; i <= pr.F.steps(); ++i)
            for (std::size_t s = 0; s < pr.F.maps[i].size(); ++s)
                if (initial_form(R.ring, pr.F.layouts[i - 1], pr.F.maps[i][s]) != pr.G.maps[i][s])
                    gr_matches = false;
        DeltaInvariants dM = delta_invariants(R, w.P);
        bool delta_contained = true;
        for (std::size_t i = 1; i <= pr.F.steps(); ++i)
            for (std::size_t s = 0; s < pr.F.layouts[i].rank(); ++s) {
                int c = pr.F.layouts[i].deg_shift[s] - pr.F.layouts[i].val_shift[s];
                if (std::find(dM.delta.begin(), dM.delta.end(), c) == dM.delta.end())
                    delta_contained = false;
            }
        BettiTable TG = betti(pr.G);
        BettiTable Tgr = betti(resolve_minimal(R, associated_graded(R, w.P, opts.gb()), opts));
        bool betti_match = true;
        for (std::size_t i = 0; i <= std::max(TG.steps(), Tgr.steps()); ++i)
            if (TG.total(i) != Tgr.total(i)) betti_match = false;
        out["gr_of_differentials_match"] = gr_matches;
        out["delta_containment"] = delta_contained;
        out["gr_betti_match"] = betti_match;
        res.text = "filtered resolution of M (F side):\n" + complex_text(R.ring, pr.F) +
                   "associated graded complex (G side):\n" + complex_text(R.ring, pr.G);
    } else if (command == "homtype") {
        HomogeneousTypeReport rep = homogeneous_type(R, w.P, opts);
        out["homogeneous_type"] = homtype_json(rep);
        res.text = std::string("homogeneous type: ") + (rep.holds ? "yes" : "no") + "\n  beta(M) =";
        for (int b : rep.betti_M) res.text += " " + std::to_string(b);
        res.text += "\n  beta(gr M) =";
        for (int b : rep.betti_gr) res.text += " " + std::to_string(b);
        res.text += "\n";
    } else if (command == "bounds") {
        ShiftBoundReport rep = verify_shift_bounds(R, w.P, opts);
        out["bounds"] = bounds_json(rep);
        bool ok = rep.all_upper && rep.all_lower && rep.reg_upper_ok;
        res.text = std::string("shift bounds: ") + (ok ? "all hold" : "VIOLATION") + "\n";
        for (const auto& row : rep.rows) {
            res.text += "  i=" + std::to_string(row.i) + ": t_i(M)=" +
                        (row.t_M == kMinusInfinity ? "-inf" : std::to_string(row.t_M)) +
                        ", t_i(gr M)=" +
                        (row.t_gr == kMinusInfinity ? "-inf" : std::to_string(row.t_gr)) + "\n";
        }
        res.text += "  v = " + std::to_string(rep.delta.v_max) +
                    ", u = " + std::to_string(rep.delta.u_min) + "\n";
        if (!ok) res.exit_code = 2;
    } else if (command == "lin") {
        Complex C = resolve_minimal(R, w.P, opts);
        Complex L = linear_part(R, C);
        out["linear_part"] = complex_json(R.ring, L);
        res.text = complex_text(R.ring, L);
    } else if (command == "ld") {
        LdReport rep = linearity_defect(R, w.P, opts.n_max, spec.ld_margin, opts.degree_cap);
        out["ld"] = ld_json(rep);
        res.text = ld_text(rep);
    } else if (command == "koszul") {
        KoszulReport rep = koszul_check(R, w.P, opts.n_max, spec.ld_margin, opts.degree_cap);
        out["koszul"] = koszul_json(rep);
        res.text = std::string("koszul observables: ld ") +
                   (rep.ld.verdict == LdVerdict::koszul ? "= 0" : "!= 0") + ", gr linear " +
                   (rep.gr_linear ? "yes" : "no") + ", homogeneous type " +
                   (rep.homogeneous_type ? "yes" : "no") + "\n  overall: " +
                   (rep.positive ? "positive" : "negative") + "\n";
    } else if (command == "probe-q1") {
        std::vector<std::vector<FiltrationStep>> chains;
        if (spec.has_filtration) chains.push_back(spec.filtration);
        ProbeReport rep = probe_question_one(R, chains, opts.n_max, spec.ld_margin, opts.degree_cap);
        out["probe"] = probe_json(rep);
        res.text = std::string("residue field probe: koszul evidence ") +
                   (rep.koszul_evidence ? "yes" : "no") + "\n" + ld_text(rep.ld_k);
    } else if (command == "verify") {
        Complex C = resolve_minimal(R, w.P, opts);
        ComplexDiagnostics d = verify_complex(R, C, &w.P.rels, opts.gb());
        ModuleOrder ord(w.P.F, R.ring.order);
        SubBasis B = groebner_basis(R, w.P.F, ord, w.P.rels, opts.gb());
        bool buchberger_ok = buchberger_criterion_holds(R, B);
        out["diagnostics"] = diagnostics_json(d);
        out["buchberger_criterion"] = buchberger_ok;
        bool ok = d.all_good() && buchberger_ok;
        res.text = std::string("verify: ") + (ok ? "all checks pass" : "FAILURE") + "\n";
        for (const std::string& msg : d.messages) res.text += "  " + msg + "\n";
        if (!ok) res.exit_code = 2;
    } else {
        throw InputError("unknown command '" + command + "'");
    }
    return res;
}

inline RunResult run_demo(const std::string& name, const CliFlags& flags) {
    RunResult res;
    json& out = res.output;
    if (name == "contro") {
        ProblemSpec spec = parse_problem_text(demos::contro_spec);
        detail::apply_flags(spec, flags);
        const QuotientRing& R = spec.R;
        Presentation P = spec.module;
        Presentation G = associated_graded(R, P, spec.options.gb());
        json nstar = json::array();
        for (const Vec& v : G.rels) nstar.push_back(to_json(R.ring, v));
        out["n_star"] = nstar;
        Complex CM = resolve_minimal(R, P, spec.options);
        Complex CG = resolve_minimal(R, G, spec.options);
        BettiTable TM = betti(CM), TG = betti(CG);
        out["betti_M"] = betti_json(TM);
        out["betti_gr"] = betti_json(TG);
        HomogeneousTypeReport ht = homogeneous_type(R, P, spec.options);
        out["homogeneous_type"] = ht.holds;
        RegularityReport regM = regularity(R.ring, TM, CM);
        RegularityReport regG = regularity(R.ring, TG, CG);
        out["reg_M"] = regularity_json(regM);
        out["reg_gr"] = regularity_json(regG);
        res.text = "demo contro: M = R(-1)+R / <(x^2, y^3)> over R = k[x,y]/(x^3)\n\nN* = {\n";
        for (const Vec& v : G.rels) res.text += "  " + vec_to_string(R.ring, v) + "\n";
        res.text += "}\n\nbetti(M):\n" + betti_text(TM) + "\nbetti(gr M):\n" + betti_text(TG) +
                    "\nhomogeneous type: " + (ht.holds ? "yes" : "no") + "\nreg(M): " +
                    regularity_text(regM) + "reg(gr M): " + regularity_text(regG);
    } else if (name == "cyclic") {
        ProblemSpec spec = parse_problem_text(demos::cyclic_spec);
        detail::apply_flags(spec, flags);
        WorkingModule w = working_module(spec);
        json istar = json::array(), jstar = json::array();
        for (const Poly& g : w.initial_ideal) istar.push_back(poly_to_string(spec.S, g));
        for (const Poly& g : w.initial_relations) jstar.push_back(poly_to_string(spec.S, g));
        out["initial_ideal"] = istar;
        out["initial_relations"] = jstar;
        Complex C = resolve_minimal(w.R, w.P, spec.options);
        BettiTable T = betti(C);
        out["betti_gr"] = betti_json(T);
        bool pattern = true;
        for (std::size_t i = 3; i + 1 <= T.steps(); ++i)
            if (T.total(i) != T.total(i + 1)) pattern = false;
        out["betti_stabilizes_from_3"] = pattern;
        RegularityReport reg = regularity(w.R.ring, T, C);
        out["reg_gr"] = regularity_json(reg);
        res.text = "demo cyclic: R = k[[x,y,z,u]]/(x^3), J = (y^2+x^2, z^2*y+u^4)\n\nI* = { ";
        for (const Poly& g : w.initial_ideal) res.text += poly_to_string(spec.S, g) + "; ";
        res.text += "}\nJ* = { ";
        for (const Poly& g : w.initial_relations) res.text += poly_to_string(spec.S, g) + "; ";
        res.text += "}\n\nbetti((R/J)^g) over R^g:\n" + betti_text(T) +
                    "\nbeta_i = beta_(i+1) for 3 <= i <= 7: " + (pattern ? "yes" : "no") +
                    "\nreg((R/J)^g): " + regularity_text(reg);
    } else {
        throw InputError("unknown demo '" + name + "' (available: contro, cyclic)");
    }
    out["command"] = "demo " + name;
    return res;
}

}  // namespace grfilt
