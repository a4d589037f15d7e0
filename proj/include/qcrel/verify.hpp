#pragma once

#include <string>
#include <vector>

namespace qcrel {

struct CheckResult {
    std::string name;
    bool passed;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool all_passed() const;
    int passed_count() const;
};

// Each suite evaluates the module's documented invariants end to end.
SuiteResult run_suite_rel();
// inject_mutation evaluates a corrupted multiplication table as if genuine,
// so the law checks must come back failing.
SuiteResult run_suite_groupoid(bool inject_mutation = false);
SuiteResult run_suite_comp();
SuiteResult run_suite_classrel();
SuiteResult run_suite_qcalg();
SuiteResult run_suite_fourier();

// which: rel, groupoid, comp, classrel, qcalg, fourier, or all.
// Throws std::invalid_argument on an unknown suite name.
std::vector<SuiteResult> run_suites(const std::string& which, bool inject_mutation = false);

}  // namespace qcrel
