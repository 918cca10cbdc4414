#pragma once

#include <string>
#include <vector>

namespace qtk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure
};

// Invariant suites backing the CLI selftest. Each returns one result per
// named invariant; bounds are inclusive sizes of the objects swept.
std::vector<CheckResult> run_combinatorics_checks(int max_n);
std::vector<CheckResult> run_polyring_checks(int max_conductor, int trials,
                                             unsigned seed);
std::vector<CheckResult> run_macdonald_checks(int max_n);
std::vector<CheckResult> run_springer_checks(int max_n);
std::vector<CheckResult> run_kronecker_checks(int max_n);
std::vector<CheckResult> run_csp_structure_checks(int max_cells);
std::vector<CheckResult> run_theorem_checks(int max_cells);
std::vector<CheckResult> run_gh_checks(int max_n);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace qtk
