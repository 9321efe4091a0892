#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "posgames/json_io.hpp"
#include "posgames/solver.hpp"

namespace posgames {

/// Reproducible check batteries behind `posgames verify <suite>`.
struct SuiteOptions {
    std::uint64_t seed = 1;
    /// Largest cycle / tree order for the domination suites; 0 = suite default.
    int max_n = 0;
    /// Random instances per property suite.
    int instances = 200;
    SolverOptions solver;
};

struct SuiteReport {
    std::string name;
    bool ok = true;
    /// One flat object per checked instance.
    json rows = json::array();
    /// First failing row, with the expected and observed values.
    std::optional<json> counterexample;
    double seconds = 0;

    [[nodiscard]] json to_json() const;
};

/// Canonical names; "thm1.8" is accepted as an alias of "cycles".
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

/// Throws InvalidArgument for unknown names; GuardExceeded propagates.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace posgames
