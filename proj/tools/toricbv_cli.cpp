// Command-line front end: fan ingestion, polytope and basis reports, bracket
// evaluation, generating-operator construction, and the oracle suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toricbv/corpus.hpp"
#include "toricbv/errors.hpp"
#include "toricbv/report.hpp"

namespace {

using namespace toricbv;

NamedFan load_fan(const std::string& path) {
    std::string document;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        document = buffer.str();
    } else {
        if (auto bundled = corpus::find(path)) return *bundled;
        std::ifstream in(path);
        if (!in) throw input_error("cannot open fan file '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        document = buffer.str();
    }
    NamedFan named = parse_fan(document);
    if (named.name.empty()) named.name = path;
    return named;
}

RatVec parse_delta(const std::string& text, int dim) {
    std::string inner = text;
    if (!inner.empty() && inner.front() == '(') inner = inner.substr(1);
    if (!inner.empty() && inner.back() == ')') inner.pop_back();
    RatVec delta;
    std::string token;
    std::istringstream stream(inner);
    while (std::getline(stream, token, ',')) delta.push_back(Rat::parse(token));
    if (static_cast<int>(delta.size()) != dim)
        throw input_error("--delta: expected " + std::to_string(dim) + " coordinates");
    return delta;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "toricbv: polyvector-field algebras of smooth complete toric varieties,\n"
        "their bracket/product structure, and generating (BV) operators"};
    app.require_subcommand(1);
    app.fallthrough(true);  // --format/--seed may follow the subcommand

    std::string format_name = "human";
    std::uint64_t seed = 1;
    bool timings = false;
    app.add_option("--format", format_name, "output format: human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--seed", seed, "seed for sampled checks (default 1)");
    app.add_flag("--timings", timings, "include timings (unstable output)");

    std::string fan_arg;
    const std::string fan_help =
        "fan file (JSON), '-' for stdin, or a bundled fan name (e.g. p2, blowup16)";

    auto* cmd_validate = app.add_subcommand("validate", "validate a fan");
    cmd_validate->add_option("fan", fan_arg, fan_help)->required();
    auto* cmd_polytope =
        app.add_subcommand("polytope", "lattice points, strata, and vertices");
    cmd_polytope->add_option("fan", fan_arg, fan_help)->required();
    auto* cmd_dims = app.add_subcommand("dims", "dimension table per degree");
    cmd_dims->add_option("fan", fan_arg, fan_help)->required();
    auto* cmd_basis = app.add_subcommand("basis", "graded basis dump");
    cmd_basis->add_option("fan", fan_arg, fan_help)->required();

    std::string elem_a, elem_b;
    auto* cmd_bracket = app.add_subcommand("bracket", "evaluate one bracket");
    cmd_bracket->add_option("fan", fan_arg, fan_help)->required();
    cmd_bracket->add_option("a", elem_a, "first element, e.g. 'chi(1)*e1'")->required();
    cmd_bracket->add_option("b", elem_b, "second element")->required();

    std::string delta_text;
    auto* cmd_bv = app.add_subcommand(
        "bv", "existence and construction of generating operators");
    cmd_bv->add_option("fan", fan_arg, fan_help)->required();
    cmd_bv->add_option("--delta", delta_text,
                       "build the operator at this delta, e.g. '(1,0)' or '1/2,0'");

    auto* cmd_check = app.add_subcommand("check", "full oracle and identity suite");
    cmd_check->add_option("fan", fan_arg, fan_help)->required();
    auto* cmd_corpus = app.add_subcommand("corpus", "run the suite over bundled fans");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    ReportOptions options;
    options.format = format_name == "machine" ? Format::machine : Format::human;
    options.seed = seed;
    options.timings = timings;

    try {
        CommandResult result;
        if (cmd_validate->parsed()) {
            result = run_validate(load_fan(fan_arg), options);
        } else if (cmd_polytope->parsed()) {
            result = run_polytope(load_fan(fan_arg), options);
        } else if (cmd_dims->parsed()) {
            result = run_dims(load_fan(fan_arg), options);
        } else if (cmd_basis->parsed()) {
            result = run_basis(load_fan(fan_arg), options);
        } else if (cmd_bracket->parsed()) {
            result = run_bracket(load_fan(fan_arg), elem_a, elem_b, options);
        } else if (cmd_bv->parsed()) {
            const NamedFan named = load_fan(fan_arg);
            std::optional<RatVec> delta;
            if (!delta_text.empty()) delta = parse_delta(delta_text, named.fan.dim);
            result = run_bv(named, delta, options);
        } else if (cmd_check->parsed()) {
            result = run_check(load_fan(fan_arg), options);
        } else if (cmd_corpus->parsed()) {
            result = run_corpus(options);
        }
        std::cout << result.output;
        return result.exit_code;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
