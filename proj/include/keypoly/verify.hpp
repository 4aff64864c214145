#pragma once

#include <functional>
#include <string>
#include <vector>

namespace keypoly {

struct VerifyOptions {
    int n_max = 4;        // ambient rank bound for exhaustive sweeps
    int max_cells = 6;    // cell bound for the shapes swept
    int samples = 100;    // random polynomials for the algebra checks
    unsigned seed = 12345;
    int jobs = 0;         // worker threads; 0 picks hardware concurrency
};

struct CheckResult {
    std::string name;
    bool pass = false;
    long long cases = 0;
    double seconds = 0.0;
    std::string detail;  // first failure, empty when pass
};

// Verification suites. Each check is pure and exhaustive over its stated
// range; heavy sweeps fan out per (shape, permutation) case across worker
// threads, with result aggregation as the only synchronization point.
//
// Suite names: example-regression, rho-example, dual-route (the Demazure and
// atom route comparisons), set-criteria, scan-invariants, decomposition,
// operator-algebra, interval, column-inert, all.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs the named suite and reports each check through the callback as it
// finishes. Returns the results; a suite passes when every check passes.
std::vector<CheckResult> run_suite(
    const std::string& name, const VerifyOptions& opts,
    const std::function<void(const CheckResult&)>& report = {});

} // namespace keypoly
