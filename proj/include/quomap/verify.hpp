#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quomap::verify {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
    double ms = 0.0;  // wall time; excluded from JSON output (reproducibility)
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct Options {
    std::vector<std::uint64_t> qs;  // empty = suite defaults
    unsigned trials = 0;            // 0 = suite defaults
    std::uint64_t seed = 0;
};

// identities | main-theorem | facfin | decompose | bijection
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const Options& opt);

// Every suite at the pinned parameters; one result per criterion C1..C9.
std::vector<CheckResult> run_acceptance();

}  // namespace quomap::verify
