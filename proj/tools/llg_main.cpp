// Command line front end.
//
//   llg analyze <file> [--out F] [--format json|text] [--samples N]
//                      [--seed N] [--mode exact|float]
//   llg self-test      [--out F] [--format json|text] [--seed N]
//
// Exit codes: 0 success, 1 input error, 2 internal route disagreement
// (oracle mismatch), 3 acceptance failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lightlike/report.hpp"
#include "lightlike/self_test.hpp"

namespace {

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 1;
    }
    os << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pointwise toolkit for degenerate (lightlike) metric geometry"};
    app.require_subcommand(1);

    std::string in_path, out_path, format = "json", mode;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze a model file");
    analyze_cmd->add_option("file", in_path, "JSON model file")->required();
    analyze_cmd->add_option("--out", out_path, "write the report here instead of stdout");
    analyze_cmd->add_option("--format", format, "json (machine) or text (human)")
        ->check(CLI::IsMember({"json", "text"}));
    analyze_cmd->add_option("--samples", samples, "directions per causal sign");
    analyze_cmd->add_option("--seed", seed, "sampling seed");
    analyze_cmd->add_option("--mode", mode, "exact or float arithmetic for the osserman test")
        ->check(CLI::IsMember({"exact", "float"}));

    std::string st_out, st_format = "text";
    std::uint64_t st_seed = 1729;
    CLI::App* selftest_cmd = app.add_subcommand("self-test", "run the acceptance suite");
    selftest_cmd->add_option("--out", st_out, "write the machine report here");
    selftest_cmd->add_option("--seed", st_seed, "suite seed");
    selftest_cmd->add_option("--format", st_format, "json or text on stdout")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    if (*analyze_cmd) {
        std::ifstream is(in_path, std::ios::binary);
        if (!is) {
            std::cerr << "input error: cannot read " << in_path << "\n";
            return 1;
        }
        std::ostringstream buf;
        buf << is.rdbuf();
        try {
            lightlike::ModelFile mf = lightlike::parse_model_text(buf.str());
            if (samples) mf.options.samples = *samples;
            if (seed) mf.options.seed = *seed;
            if (mode == "exact") mf.options.mode = lightlike::ArithmeticMode::Exact;
            if (mode == "float") mf.options.mode = lightlike::ArithmeticMode::Float;
            lightlike::RunReport rep = lightlike::analyze(mf);
            return write_output(format == "json" ? lightlike::serialize_report(rep) : rep.human,
                                out_path);
        } catch (const lightlike::ParseError& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 1;
        } catch (const std::invalid_argument& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 1;
        } catch (const lightlike::RouteMismatchError& e) {
            std::cerr << "internal route disagreement: " << e.what() << "\n";
            return 2;
        }
    }

    if (*selftest_cmd) {
        lightlike::AcceptanceRun run = lightlike::run_acceptance(st_seed);
        std::ostringstream lines;
        for (const auto& c : run.criteria) {
            lines << "criterion " << c.id << ": " << (c.pass ? "PASS" : "FAIL") << " - " << c.name
                  << " (" << c.detail << ") [" << std::fixed << std::setprecision(2) << c.seconds
                  << "s]\n";
        }
        lines << "acceptance: " << (run.all_pass ? "PASS" : "FAIL") << " (seed " << st_seed
              << ")\n";
        std::string machine = run.report.dump(2) + "\n";
        if (!st_out.empty()) {
            if (int rc = write_output(machine, st_out)) return rc;
        }
        std::cout << (st_format == "json" ? machine : lines.str());
        return run.all_pass ? 0 : 3;
    }
    return 0;
}
