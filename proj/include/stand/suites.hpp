#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace stand {

/// Parameters of a verification run. Deterministic given (seed, config).
struct RunConfig {
    std::uint64_t seed = 7;
    std::optional<double> tol;   // overrides the axiom-law tolerance
    int trials = 200;            // random-instance count for property runs
    int n = 4;                   // dimension for random subspaces (<= 8)
    int axiom_samples = 1000;    // samples per reflection/dilation law suite
    int budget = 640;            // cone-sampling budget per compression test
    int koufany_words = 1000;
    int grid_size = 4096;        // N
    double grid_half_width = 20.0;  // L
    std::string algebra = "all";    // sym | herm | spin | all
};

struct SuiteCheck {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(const std::string& name, double residual, double threshold,
             const std::string& note = {}) {
        checks.push_back({name, residual, threshold, residual <= threshold, note});
    }

    void add_flag(const std::string& name, bool ok, const std::string& note = {}) {
        checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok, note});
    }
};

SuiteResult run_axioms_suite(const RunConfig& cfg);
SuiteResult run_modular_suite(const RunConfig& cfg);
SuiteResult run_geodesic_suite(const RunConfig& cfg);
SuiteResult run_jordan_suite(const RunConfig& cfg);
SuiteResult run_semigroup_suite(const RunConfig& cfg);
SuiteResult run_bgl_suite(const RunConfig& cfg);
SuiteResult run_affine_suite(const RunConfig& cfg);

/// Every suite, dispatched concurrently; results assembled in fixed order.
std::vector<SuiteResult> run_all_suites(const RunConfig& cfg);

SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// Stable machine-readable report ("schema": 1). Contains no volatile data,
/// so identical (seed, config) runs serialize byte-identically.
nlohmann::ordered_json report_json(const std::vector<SuiteResult>& results,
                                   const RunConfig& cfg);

} // namespace stand
