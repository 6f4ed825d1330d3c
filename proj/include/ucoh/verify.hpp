#pragma once

// Seeded property checks behind the `verify` command.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ucoh {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    double worst = 0.0;
    double threshold = 0.0;
    int trials = 0;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::optional<int> trials;    // overrides every per-check trial count
    std::optional<double> tol;    // overrides residual thresholds (not bound ratios)
};

/// symplectic, siegel, overlap, representation, oracle, dsl.
const std::vector<std::string>& suite_names();

/// Runs one suite or "all". Throws InputError for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace ucoh
