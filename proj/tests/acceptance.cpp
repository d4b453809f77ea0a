// Acceptance gate: runs every criterion at its pinned parameters and prints
// one pass/fail line each. Exit 0 only when all pass.

#include <iomanip>
#include <iostream>

#include "quomap/verify.hpp"

int main() {
    bool all_pass = true;
    for (const auto& check : quomap::verify::run_acceptance()) {
        std::cout << (check.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(42)
                  << check.name << " (" << std::fixed << std::setprecision(0) << check.ms << " ms)";
        if (!check.pass) std::cout << "  " << check.detail;
        std::cout << '\n';
        all_pass = all_pass && check.pass;
    }
    std::cout << (all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << '\n';
    return all_pass ? 0 : 1;
}
