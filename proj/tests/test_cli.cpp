#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <grfilt/cli.hpp>

using namespace grfilt;

namespace {

json base_spec() {
    return json::parse(R"({
      "variables": ["x", "y"],
      "ideal": ["x^3"],
      "module": {
        "rank": 2,
        "degree_shifts": [1, 0],
        "valuation_shifts": [0, 0],
        "relations": [["x^2", "y^3"]]
      },
      "options": {"n_max": 6, "degree_cap": 20}
    })");
}

}  // namespace

TEST_CASE("problem parsing accepts the schema and applies defaults") {
    ProblemSpec spec = parse_problem(base_spec());
    CHECK(spec.S.field.p == 32003);
    CHECK(spec.S.vars == std::vector<std::string>{"x", "y"});
    CHECK(spec.module.F.rank() == 2);
    CHECK(spec.module.rels.size() == 1);
    CHECK(spec.options.n_max == 6);
    CHECK_FALSE(spec.local);

    json j = base_spec();
    j.erase("options");
    ProblemSpec d = parse_problem(j);
    CHECK(d.options.n_max == 8);
    CHECK(d.options.degree_cap == 24);
}

TEST_CASE("schema violations carry JSON-pointer paths") {
    auto expect_error = [](json j, const std::string& needle) {
        try {
            parse_problem(j);
            FAIL_CHECK("expected InputError for " << needle);
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    json j = base_spec();
    j.erase("module");
    expect_error(j, "/module");

    j = base_spec();
    j["module"]["relations"][0][0] = "q + 1";
    expect_error(j, "/module/relations/0/0");

    j = base_spec();
    j["module"]["relations"][0] = json::array({"x", "y"});  // inhomogeneous for the shifts
    expect_error(j, "/module/relations/0");

    j = base_spec();
    j["module"]["valuation_shifts"] = json::array({-1, 0});
    expect_error(j, "/module/valuation_shifts");

    j = base_spec();
    j["options"]["order"] = "lex";
    expect_error(j, "/options/order");

    j = base_spec();
    j["ideal"] = json::array({"x^2 + x^3"});
    expect_error(j, "/ideal");

    j = base_spec();
    j["variables"] = json::array();
    expect_error(j, "/variables");
}

TEST_CASE("report formats match the documented shapes") {
    SUBCASE("divergent regularity") {
        ProblemSpec spec = parse_problem(json::parse(R"({
          "variables": ["x", "y"], "ideal": ["x^3"],
          "module": {"rank": 2, "relations": [["x^2","0"],["0","x*y^3"]]},
          "options": {"n_max": 8}
        })"));
        RunResult r = run_on_spec("reg", spec, {});
        CHECK(r.output["regularity"]["status"] == "divergent-periodic");
        CHECK(r.output["regularity"]["value"] == "infinity");
    }
    SUBCASE("koszul verdict") {
        ProblemSpec spec = parse_problem(json::parse(R"({
          "variables": ["x", "y"], "ideal": ["x*y"],
          "module": {"rank": 1, "relations": [["x"], ["y"]]}
        })"));
        RunResult r = run_on_spec("ld", spec, {});
        CHECK(r.output["ld"]["verdict"] == "koszul");
    }
    SUBCASE("betti on a free module is a single row") {
        ProblemSpec spec = parse_problem(json::parse(R"({
          "variables": ["x", "y"],
          "module": {"rank": 2, "degree_shifts": [0, 1]}
        })"));
        RunResult r = run_on_spec("betti", spec, {});
        const json& rows = r.output["betti"]["rows"];
        REQUIRE(rows.size() == 1);
        CHECK(rows[0]["total"] == 2);
    }
}

TEST_CASE("CLI determinism: identical specs give byte-identical JSON") {
    for (const char* cmd : {"betti", "reg", "gr", "homtype", "ld"}) {
        ProblemSpec a = parse_problem(base_spec());
        ProblemSpec b = parse_problem(base_spec());
        RunResult ra = run_on_spec(cmd, a, {});
        RunResult rb = run_on_spec(cmd, b, {});
        CHECK(ra.output.dump(2) == rb.output.dump(2));
        CHECK(ra.text == rb.text);
    }
}

TEST_CASE("demo outputs re-parse and carry the advertised facts") {
    SUBCASE("contro") {
        RunResult r = run_demo("contro", {});
        json reparsed = json::parse(r.output.dump());
        CHECK(reparsed["homogeneous_type"] == false);
        CHECK(reparsed["reg_M"]["status"] == "exact-finite-pd");
        CHECK(reparsed["reg_M"]["value"] == 2);
        CHECK(reparsed["reg_gr"]["status"] == "divergent-periodic");
        CHECK(reparsed["reg_gr"]["value"] == "infinity");
        CHECK(reparsed["n_star"].size() == 2);
        for (std::size_t i = 0; i <= 8; ++i)
            CHECK(reparsed["betti_gr"]["rows"][i]["total"] == 2);
    }
    SUBCASE("cyclic") {
        RunResult r = run_demo("cyclic", {});
        json reparsed = json::parse(r.output.dump());
        CHECK(reparsed["initial_ideal"] == json::array({"x^3"}));
        CHECK(reparsed["betti_stabilizes_from_3"] == true);
        std::string status = reparsed["reg_gr"]["status"].get<std::string>();
        CHECK((status == "divergent-periodic" || status == "lower-bound"));
    }
    SUBCASE("unknown demo") { CHECK_THROWS_AS(run_demo("nope", {}), InputError); }
}

TEST_CASE("flags override spec options") {
    ProblemSpec spec = parse_problem(base_spec());
    CliFlags flags;
    flags.steps = 3;
    RunResult r = run_on_spec("betti", spec, flags);
    CHECK(r.output["betti"]["rows"].size() <= 4);
    CliFlags bad;
    bad.order = "lex";
    CHECK_THROWS_AS(run_on_spec("betti", parse_problem(base_spec()), bad), InputError);
}

TEST_CASE("verify and bounds succeed on sound inputs") {
    ProblemSpec spec = parse_problem(base_spec());
    RunResult v = run_on_spec("verify", spec, {});
    CHECK(v.exit_code == 0);
    CHECK(v.output["diagnostics"]["ok"] == true);
    CHECK(v.output["buchberger_criterion"] == true);

    RunResult b = run_on_spec("bounds", parse_problem(base_spec()), {});
    CHECK(b.exit_code == 0);

    CHECK_THROWS_AS(run_on_spec("frobnicate", parse_problem(base_spec()), {}), InputError);
}

TEST_CASE("local mode routes through tangent cones") {
    ProblemSpec spec = parse_problem(json::parse(R"({
      "variables": ["x", "y", "z", "u"],
      "ideal": ["x^3"],
      "mode": "local",
      "module": {"rank": 1, "relations": ["y^2+x^2", "z^2*y+u^4"]},
      "options": {"n_max": 3, "degree_cap": 30}
    })"));
    RunResult r = run_on_spec("gr", spec, {});
    CHECK(r.output["initial_ideal"] == json::array({"x^3"}));
    bool has_yz2 = false;
    for (const auto& s : r.output["initial_relations"])
        if (s.get<std::string>() == "y*z^2") has_yz2 = true;
    CHECK(has_yz2);

    // filtration chains are rejected in local mode
    json j = json::parse(R"({
      "variables": ["x"], "ideal": [], "mode": "local",
      "module": {"rank": 1},
      "filtration": [{"valuation": 0, "generators": [["x"]]}]
    })");
    CHECK_THROWS_AS(parse_problem(j), InputError);
}

TEST_CASE("filtration chains feed the graded pipeline") {
    ProblemSpec spec = parse_problem(json::parse(R"({
      "variables": ["x", "y"],
      "ideal": ["x^3", "y^4"],
      "module": {"rank": 1},
      "filtration": [
        {"valuation": 0, "generators": [["x"], ["y"]]},
        {"valuation": 1, "generators": [["x^2"], ["x*y"], ["y^2"]]}
      ],
      "options": {"n_max": 4}
    })"));
    RunResult r = run_on_spec("betti", spec, {});
    // the chain is the m-adic filtration on m: the encoded presentation prunes
    // to the two minimal generators (their replacements sit at least as deep)
    CHECK(r.output["betti"]["rows"][0]["total"] == 2);
}

TEST_CASE("reg picks up a linearity-defect certificate when the window is open-ended") {
    ProblemSpec spec = parse_problem(json::parse(R"({
      "variables": ["x", "y"], "ideal": ["x*y"],
      "module": {"rank": 1, "relations": [["x"], ["y"]]},
      "options": {"n_max": 8}
    })"));
    RunResult r = run_on_spec("reg", spec, {});
    CHECK(r.output["regularity"]["status"] == "exact-certified-by-ld");
    CHECK(r.output["regularity"]["value"] == 0);
}
