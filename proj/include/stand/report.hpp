#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace stand {

/// Result of checking one algebraic law over a sample set.
struct LawCheck {
    std::string law;
    std::size_t samples = 0;
    double max_residual = 0.0;
    bool pass = true;
    std::string note;  // witness description on failure
};

/// Aggregated result of an axiom-verification run. `pass` on each law is
/// `max_residual <= tol`; precondition violations (DegeneratePoint events)
/// are recorded without aborting the run.
struct AxiomReport {
    std::string instance;
    double tol = 0.0;
    std::vector<LawCheck> laws;
    std::size_t precondition_violations = 0;
    std::vector<std::string> notes;

    LawCheck& law(const std::string& name) {
        for (auto& l : laws)
            if (l.law == name) return l;
        laws.push_back(LawCheck{name, 0, 0.0, true, {}});
        return laws.back();
    }

    void record(const std::string& name, double residual, const std::string& witness = {}) {
        LawCheck& l = law(name);
        ++l.samples;
        if (residual > l.max_residual) {
            l.max_residual = residual;
            if (residual > tol) l.note = witness;
        }
        l.pass = l.max_residual <= tol;
    }

    bool pass() const {
        return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.pass; });
    }

    double worst() const {
        double w = 0.0;
        for (const auto& l : laws) w = std::max(w, l.max_residual);
        return w;
    }
};

} // namespace stand
