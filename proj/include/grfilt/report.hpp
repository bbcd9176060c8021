#pragma once

#include <json.hpp>

#include "linearity.hpp"
#include "tangent.hpp"

namespace grfilt {

// nlohmann::json with the default (ordered map) backend keeps keys sorted,
// which the CLI relies on for byte-stable output.
using json = nlohmann::json;

inline json to_json(const Ring& R, const Vec& v) {
    json a = json::array();
    for (const Poly& f : v.comp) a.push_back(poly_to_string(R, f));
    return a;
}

inline json layout_json(const Layout& L) {
    return json{{"degree_shifts", L.deg_shift}, {"valuation_shifts", L.val_shift}};
}

inline json betti_json(const BettiTable& T) {
    json rows = json::array();
    for (std::size_t i = 0; i <= T.steps(); ++i) {
        json row;
        row["i"] = i;
        row["total"] = T.total(i);
        json by;
        for (auto& [j, n] : T.by_degree[i]) by[std::to_string(j)] = n;
        row["by_degree"] = by;
        row["t"] = T.t(i) == kMinusInfinity ? json("-infinity") : json(T.t(i));
        rows.push_back(row);
    }
    return json{{"finished", T.finished}, {"rows", rows}, {"truncated", T.truncated}};
}

inline std::string betti_text(const BettiTable& T) {
    int jmin = 0, jmax = 0;
    bool any = false;
    for (std::size_t i = 0; i <= T.steps(); ++i)
        for (auto& [j, n] : T.by_degree[i]) {
            jmin = any ? std::min(jmin, j) : j;
            jmax = any ? std::max(jmax, j) : j;
            any = true;
        }
    std::string out = "  i\\j |";
    for (int j = jmin; j <= jmax; ++j) out += " " + std::to_string(j) + "\t";
    out += " total\n";
    for (std::size_t i = 0; i <= T.steps(); ++i) {
        out += "  " + std::to_string(i) + "   |";
        for (int j = jmin; j <= jmax; ++j) {
            int b = T.beta(i, j);
            out += b ? " " + std::to_string(b) + "\t" : " .\t";
        }
        out += " " + std::to_string(T.total(i)) + "\n";
    }
    if (!T.finished) out += T.truncated ? "  (truncated by degree cap)\n" : "  (window end)\n";
    return out;
}

inline json regularity_json(const RegularityReport& r) {
    json j;
    j["status"] = to_string(r.status);
    if (r.infinite)
        j["value"] = "infinity";
    else if (r.value == kMinusInfinity)
        j["value"] = "-infinity";
    else if (r.status == RegStatus::lower_bound)
        j["value"] = ">= " + std::to_string(r.value);
    else
        j["value"] = r.value;
    json slope = json::array();
    for (int s : r.slope) slope.push_back(s == kMinusInfinity ? json("-infinity") : json(s));
    j["slope"] = slope;
    if (r.periodicity)
        j["periodicity"] = json{{"start", r.periodicity->start},
                                {"period", r.periodicity->period},
                                {"drift", r.periodicity->drift}};
    return j;
}

inline std::string regularity_text(const RegularityReport& r) {
    std::string v = r.infinite                        ? "infinity"
                    : r.value == kMinusInfinity       ? "-infinity"
                    : r.status == RegStatus::lower_bound ? ">= " + std::to_string(r.value)
                                                         : std::to_string(r.value);
    std::string out = "regularity: " + v + "  [" + to_string(r.status) + "]";
    if (r.periodicity)
        out += "  (period " + std::to_string(r.periodicity->period) + " from step " +
               std::to_string(r.periodicity->start) + ", drift " +
               std::to_string(r.periodicity->drift) + ")";
    return out + "\n";
}

inline json ld_json(const LdReport& r) {
    json j;
    switch (r.verdict) {
        case LdVerdict::koszul: j["verdict"] = "koszul"; break;
        case LdVerdict::certified: j["verdict"] = "ld=" + std::to_string(r.value); break;
        case LdVerdict::truncated_bound: j["verdict"] = "ld>=" + std::to_string(r.value); break;
    }
    j["window"] = r.window;
    j["margin"] = r.margin;
    j["nonvanishing"] = r.nonvanishing;
    j["finite_pd"] = r.finite_pd;
    j["truncated"] = r.resolution_truncated;
    return j;
}

inline std::string ld_text(const LdReport& r) {
    std::string out = "linearity defect: ";
    switch (r.verdict) {
        case LdVerdict::koszul: out += "0 (koszul)"; break;
        case LdVerdict::certified: out += std::to_string(r.value) + " (certified)"; break;
        case LdVerdict::truncated_bound:
            out += ">= " + std::to_string(r.value) + " (window " + std::to_string(r.window) + ")";
            break;
    }
    out += "\n  nonvanishing H_i(lin F) at i =";
    if (r.nonvanishing.empty()) out += " (none)";
    for (int i : r.nonvanishing) out += " " + std::to_string(i);
    return out + "\n";
}

inline json complex_json(const Ring& R, const Complex& C) {
    json j;
    json layouts = json::array();
    for (const Layout& L : C.layouts) layouts.push_back(layout_json(L));
    j["layouts"] = layouts;
    json maps = json::array();
    for (std::size_t i = 1; i <= C.steps(); ++i) {
        json cols = json::array();
        for (const Vec& c : C.maps[i]) cols.push_back(to_json(R, c));
        maps.push_back(cols);
    }
    j["maps"] = maps;
    j["finished"] = C.finished;
    j["truncated"] = C.truncated;
    return j;
}

inline std::string complex_text(const Ring& R, const Complex& C) {
    std::string out;
    for (std::size_t i = 0; i <= C.steps(); ++i) {
        out += "F_" + std::to_string(i) + ": rank " + std::to_string(C.layouts[i].rank()) +
               ", degrees (";
        for (std::size_t s = 0; s < C.layouts[i].rank(); ++s)
            out += (s ? "," : "") + std::to_string(C.layouts[i].deg_shift[s]);
        out += "), valuations (";
        for (std::size_t s = 0; s < C.layouts[i].rank(); ++s)
            out += (s ? "," : "") + std::to_string(C.layouts[i].val_shift[s]);
        out += ")\n";
        if (i == 0) continue;
        out += "d_" + std::to_string(i) + " columns:\n";
        for (const Vec& c : C.maps[i]) out += "  " + vec_to_string(R, c) + "\n";
    }
    if (C.finished) out += "resolution terminates (finite projective dimension)\n";
    if (C.truncated) out += "warning: degree cap reached, tail may be incomplete\n";
    return out;
}

inline json homtype_json(const HomogeneousTypeReport& r) {
    return json{{"betti_M", r.betti_M},
                {"betti_gr", r.betti_gr},
                {"bound_ok", r.bound_ok},
                {"holds", r.holds},
                {"truncated", r.truncated}};
}

inline json bounds_json(const ShiftBoundReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json x;
        x["i"] = row.i;
        x["t_M"] = row.t_M == kMinusInfinity ? json("-infinity") : json(row.t_M);
        x["t_gr"] = row.t_gr == kMinusInfinity ? json("-infinity") : json(row.t_gr);
        x["upper_ok"] = row.upper_ok;
        x["lower_ok"] = row.lower_ok;
        rows.push_back(x);
    }
    return json{{"rows", rows},
                {"delta", r.delta.delta},
                {"v", r.delta.v_max},
                {"u", r.delta.u_min},
                {"homogeneous_type", r.homogeneous_type},
                {"all_upper", r.all_upper},
                {"all_lower", r.all_lower},
                {"reg_upper_ok", r.reg_upper_ok}};
}

inline json koszul_json(const KoszulReport& r) {
    return json{{"ld", ld_json(r.ld)},
                {"gr_linear_resolution", r.gr_linear},
                {"gr_single_degree", r.gr_single_degree},
                {"homogeneous_type", r.homogeneous_type},
                {"positive", r.positive}};
}

inline json delta_json(const DeltaInvariants& d) {
    return json{{"delta", d.delta},
                {"degrees", d.degrees},
                {"v", d.v_max},
                {"u", d.u_min},
                {"empty", d.empty}};
}

inline json standard_basis_json(const Ring& R, const StandardBasis& sb) {
    json elems = json::array();
    for (std::size_t i = 0; i < sb.lifts.size(); ++i) {
        json e;
        e["element"] = to_json(R, sb.lifts[i]);
        e["initial_form"] = to_json(R, sb.forms[i]);
        e["degree"] = sb.degrees[i];
        e["valuation"] = sb.valuations[i];
        elems.push_back(e);
    }
    return json{{"elements", elems}, {"size", sb.lifts.size()}, {"truncated", sb.truncated}};
}

inline json diagnostics_json(const ComplexDiagnostics& d) {
    return json{{"dd_zero", d.dd_zero},
                {"homogeneous", d.homogeneous},
                {"minimal", d.minimal},
                {"presents_module", d.presents_module},
                {"exact_at", d.exact_at},
                {"messages", d.messages},
                {"ok", d.all_good()}};
}

inline json probe_json(const ProbeReport& r) {
    json slope = json::array();
    for (int s : r.reg_slope_k) slope.push_back(s == kMinusInfinity ? json("-infinity") : json(s));
    return json{{"ld_k", ld_json(r.ld_k)},
                {"reg_slope_k", slope},
                {"homtype_m_adic", r.homtype_m_adic},
                {"homtype_chains", r.homtype_chains},
                {"koszul_evidence", r.koszul_evidence}};
}

inline json formula_json(const FormulaReport& r) {
    json j;
    j["skipped"] = r.skipped;
    if (r.skipped)
        j["reason"] = r.skip_reason;
    else {
        j["ok"] = r.ok;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
    }
    return j;
}

}  // namespace grfilt
