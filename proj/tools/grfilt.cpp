#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <grfilt/cli.hpp>

namespace {

const char* kCommands =
    "resolve, betti, reg, gr, std-basis, filtered-res, homtype, bounds, lin, ld, koszul, "
    "probe-q1, verify, demo";

}

int main(int argc, char** argv) {
    CLI::App app{"graded resolutions, filtrations and linearity defects over F_p"};
    std::string command, input;
    grfilt::CliFlags flags;
    int steps = -1, degree_cap = -1;
    std::string order;
    app.add_option("command", command, std::string("one of: ") + kCommands)->required();
    app.add_option("input", input, "input JSON file (or demo name for the demo command)");
    app.add_option("--steps", steps, "homological window n_max");
    app.add_option("--degree-cap", degree_cap, "degree truncation cap");
    app.add_option("--order", order, "monomial order: degrevlex or deglex");
    app.add_flag("--json", flags.json_output, "emit a JSON report");
    CLI11_PARSE(app, argc, argv);
    if (steps >= 0) flags.steps = steps;
    if (degree_cap >= 0) flags.degree_cap = degree_cap;
    if (!order.empty()) flags.order = order;

    try {
        grfilt::RunResult res;
        if (command == "demo") {
            if (input.empty()) throw grfilt::InputError("demo requires a name: contro or cyclic");
            res = grfilt::run_demo(input, flags);
        } else {
            if (input.empty()) throw grfilt::InputError("command requires an input JSON file");
            std::ifstream fs(input);
            if (!fs) throw grfilt::InputError("cannot open input file '" + input + "'");
            std::stringstream buf;
            buf << fs.rdbuf();
            grfilt::ProblemSpec spec = grfilt::parse_problem_text(buf.str());
            res = grfilt::run_on_spec(command, std::move(spec), flags);
        }
        if (flags.json_output)
            std::cout << res.output.dump(2) << "\n";
        else
            std::cout << res.text;
        return res.exit_code;
    } catch (const grfilt::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
