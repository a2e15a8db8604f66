#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace overshoot {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;     ///< measured values vs thresholds; deterministic
    double seconds = 0.0;   ///< wall time (not part of report bodies)
    double time_limit = 0.0;  ///< seconds; 0 = none
};

struct AcceptanceOptions {
    std::uint64_t master_seed = 42;
    unsigned threads = 0;
    std::vector<int> only;  ///< empty: all criteria
    std::function<void(const CriterionResult&)> on_result;
};

/// Runs the acceptance criteria in id order. Each criterion draws from
/// streams keyed by (master_seed, criterion id), so results do not depend on
/// which criteria run or on the thread count.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "[PASS] AC<id> <name>: <detail> (<seconds>s)"
std::string format_result_line(const CriterionResult& result);

}  // namespace overshoot
