#pragma once

// Acceptance checks for the whole assembly, runnable from the CLI and from
// the test suite.  Each check measures its quantities with independent
// numerics (finite differences, contour means, log-log slopes) rather than
// re-evaluating the formulas under test.

#include <string>
#include <vector>

#include "lemwedge/farfield.hpp"

namespace lemwedge {

struct CheckResult {
    std::string name;    // stable identifier, kebab-case
    bool passed;
    std::string detail;  // one-line measurement summary
};

// Runs the twelve checks in a fixed order with one seeded generator, so a
// given (cfg, seed) pair always produces the identical report.
std::vector<CheckResult> run_acceptance(const WedgeConfig& cfg, unsigned seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace lemwedge
