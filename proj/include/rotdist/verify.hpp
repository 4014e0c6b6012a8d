#pragma once

#include <string>
#include <vector>

namespace rotdist {

// One empirical check inside a suite; on failure the detail string carries
// a minimal reproducer (trees and operation inputs).
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

std::vector<std::string> verification_suites();

// Runs one suite. max_size <= 0 keeps the suite's default exhaustive range;
// otherwise sizes/parameters are capped at the given value.
SuiteResult run_verification(const std::string& suite, int max_size = 0);

} // namespace rotdist
