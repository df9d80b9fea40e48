// arbormzv: arborified multiple zeta values from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "arbor/commands.hpp"
#include "arbor/theta_poly.hpp"
#include "arbor/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

arbor::ReportFormat parse_format(const std::string& name) {
    if (name == "tsv") return arbor::ReportFormat::tsv;
    if (name == "json") return arbor::ReportFormat::json;
    return arbor::ReportFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arborified multiple zeta values: expansions, evaluation and identity checks"};
    app.require_subcommand(1);

    double tol = arbor::kDefaultTolerance;
    std::string format = "text";
    auto add_tol = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "Absolute tolerance for numeric values (>= 1e-12)")
            ->check(CLI::Range(arbor::kMinTolerance, 1.0));
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "tsv", "json"}));
    };

    // expand
    auto* expand = app.add_subcommand("expand", "Arborify a forest into words");
    bool simple = false, contracting = false;
    std::string forest_text;
    auto* simple_flag = expand->add_flag("--simple", simple, "Simple arborification (x0/x1 decorations)");
    expand->add_flag("--contracting", contracting, "Contracting arborification (y decorations)")
        ->excludes(simple_flag);
    expand->add_option("forest", forest_text, "Forest, e.g. \"y3(y1,y2)\" or \"e\"")->required();

    // zeta
    auto* zeta = app.add_subcommand("zeta", "Expand and evaluate an arborified MZV");
    std::string zeta_input;
    bool as_word = false;
    zeta->add_option("input", zeta_input, "Forest, or word with --word")->required();
    zeta->add_flag("--word", as_word, "Treat the input as a word");
    add_tol(zeta);

    // verify
    auto* verify = app.add_subcommand("verify", "Run an identity suite");
    std::string suite;
    int max_weight = -1;
    int max_vertices = -1;
    int bound = 5000;
    verify->add_option("suite", suite, "relations | bmz | hopf | oracle")
        ->required()
        ->check(CLI::IsMember({"relations", "bmz", "hopf", "oracle"}));
    verify->add_option("--max-weight", max_weight, "Largest word weight (relations, bmz)")
        ->check(CLI::Range(0, 10));
    verify->add_option("--max-vertices", max_vertices, "Largest forest size (hopf, oracle)")
        ->check(CLI::Range(1, 6));
    verify->add_option("--bound", bound, "Box size of the brute-force tree sums (oracle)")
        ->check(CLI::Range(1, 100000));
    add_tol(verify);
    add_format(verify);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List canonical rooted trees");
    int vertices = 1, decorations = 1, cap = 8;
    enumerate->add_option("n", vertices, "Number of vertices")->required();
    enumerate->add_option("--decorations", decorations, "Decorations y1..yk (1 = undecorated)");
    enumerate->add_option("--cap", cap, "Largest accepted vertex count");

    // hoffman
    auto* hoffman = app.add_subcommand("hoffman", "Hoffman exponential or logarithm of a Y-word");
    std::string which, word_text;
    hoffman->add_option("map", which, "exp | log")->required()->check(CLI::IsMember({"exp", "log"}));
    hoffman->add_option("word", word_text, "Y-word, e.g. y1.y2")->required();

    // selftest
    auto* selftest = app.add_subcommand("selftest", "Check every published example");
    add_tol(selftest);
    add_format(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*expand) {
            if (!simple && !contracting) throw arbor::UsageError("expand needs --simple or --contracting");
            std::cout << arbor::expand_command(simple ? arbor::Flavor::simple : arbor::Flavor::contracting,
                                               forest_text)
                      << "\n";
            return kOk;
        }
        if (*zeta) {
            auto result = arbor::zeta_command(zeta_input, as_word, tol);
            std::cout << result.combination << "\n= " << arbor::format_real(result.value) << "  (tolerance "
                      << arbor::format_real(result.tolerance) << ")\n";
            return kOk;
        }
        if (*verify) {
            arbor::Report report;
            if (suite == "relations") {
                report = arbor::verify_relations(max_weight < 0 ? 5 : max_weight, tol);
            } else if (suite == "bmz") {
                report = arbor::verify_bmz(max_weight < 0 ? 4 : max_weight, tol);
            } else if (suite == "hopf") {
                report = arbor::verify_hopf(max_vertices < 0 ? 4 : max_vertices);
            } else {
                report = arbor::verify_oracle(max_vertices < 0 ? 3 : max_vertices, bound, tol);
            }
            std::cout << arbor::format_report(report, parse_format(format));
            return report.all_pass() ? kOk : kVerificationFailed;
        }
        if (*enumerate) {
            std::cout << arbor::enumerate_command(vertices, decorations, cap);
            return kOk;
        }
        if (*hoffman) {
            std::cout << arbor::hoffman_command(which, word_text) << "\n";
            return kOk;
        }
        if (*selftest) {
            auto report = arbor::run_selftest(tol);
            std::cout << arbor::format_report(report, parse_format(format));
            return report.all_pass() ? kOk : kVerificationFailed;
        }
    } catch (const arbor::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const arbor::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const arbor::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
