#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "riscov/config.hpp"

namespace riscov::cli {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the full acceptance suite against the given base configuration
// (trial counts and tolerances are fixed by the suite itself), printing one
// PASS/FAIL line per criterion to `report`. Returns all results.
std::vector<CheckResult> run_acceptance(const RunConfig& base, std::ostream& report);

// Convenience: run_acceptance + summary; returns the number of failed checks.
int cmd_validate(const RunConfig& base, std::ostream& report);

}  // namespace riscov::cli
