// Batch entry point: runs the verification suites and writes a
// machine-readable report. Exit codes: 0 all checks pass, 1 suite failure,
// 2 configuration error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stand/suites.hpp"

namespace {

void print_suite(const stand::SuiteResult& result) {
    for (const auto& c : result.checks) {
        std::cout << (c.pass ? "  [pass] " : "  [FAIL] ") << result.suite << "/" << c.name
                  << "  residual=" << c.residual << " threshold=" << c.threshold;
        if (!c.note.empty()) std::cout << "  (" << c.note << ")";
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"standspace: verification suites for the geometry of standard subspaces"};
    app.require_subcommand(1);

    stand::RunConfig cfg;
    std::string json_path;
    double tol = -1.0;

    app.add_option("--seed", cfg.seed, "RNG seed (identical seeds give identical reports)");
    app.add_option("--tol", tol, "override for the axiom-law tolerance");
    app.add_option("--trials", cfg.trials, "random-instance count for property runs");
    app.add_option("--n", cfg.n, "dimension for random subspaces (2..8)")->check(CLI::Range(2, 8));
    app.add_option("--samples", cfg.axiom_samples, "samples per axiom law");
    app.add_option("--budget", cfg.budget, "cone-sampling budget per compression test");
    app.add_option("--words", cfg.koufany_words, "number of random Koufany words");
    app.add_option("--N", cfg.grid_size, "grid size for the affine-flow model (power of two)");
    app.add_option("--L", cfg.grid_half_width, "half-width of the theta domain");
    app.add_option("--json", json_path, "write the JSON report to this path");
    app.add_option("--algebra", cfg.algebra, "Jordan family: sym | herm | spin | all")
        ->check(CLI::IsMember({"sym", "herm", "spin", "all"}));

    const std::vector<std::string> suite_names = {"axioms",    "modular", "geodesic", "jordan",
                                                  "semigroup", "bgl",     "affine"};
    for (const auto& name : suite_names)
        app.add_subcommand(name, "run the " + name + " suite");
    app.add_subcommand("all", "run every suite");

    CLI11_PARSE(app, argc, argv);
    if (tol > 0.0) cfg.tol = tol;

    try {
        const auto started = std::chrono::steady_clock::now();
        std::vector<stand::SuiteResult> results;
        if (app.get_subcommand("all")->parsed()) {
            results = stand::run_all_suites(cfg);
        } else {
            for (const auto& name : suite_names)
                if (app.get_subcommand(name)->parsed())
                    results.push_back(stand::run_suite(name, cfg));
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

        bool all_pass = true;
        for (const auto& result : results) {
            print_suite(result);
            all_pass = all_pass && result.pass();
        }
        std::cout << (all_pass ? "PASS" : "FAIL") << " (" << seconds << " s)\n";

        const auto report = stand::report_json(results, cfg);
        if (!json_path.empty()) {
            std::ofstream file(json_path, std::ios::binary);
            if (!file) {
                std::cerr << "cannot open " << json_path << " for writing\n";
                return 2;
            }
            file << report.dump(2) << "\n";
        }
        return all_pass ? 0 : 1;
    } catch (const stand::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
