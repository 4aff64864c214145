// Acceptance gate: runs every verification check at its contract scale and
// prints exactly one PASS/FAIL line per criterion. Time budgets are part of
// the contract where stated: the two regressions must land under a second
// each and the two dual route sweeps under two minutes each. Exits with the
// number of failed criteria.

#include <cstdio>
#include <map>
#include <string>

#include "keypoly/verify.hpp"

int main() {
    const keypoly::VerifyOptions opts;  // contract scale: n <= 4, 6 cells, 100 samples
    const std::map<std::string, double> budgets{
        {"example-regression", 1.0},
        {"rho-example", 1.0},
        {"demazure-routes", 120.0},
        {"atom-routes", 120.0},
    };

    int criterion = 0;
    int failures = 0;
    keypoly::run_suite("all", opts, [&](const keypoly::CheckResult& r) {
        ++criterion;
        bool pass = r.pass;
        std::string note = r.detail;
        const auto budget = budgets.find(r.name);
        if (budget != budgets.end() && r.seconds >= budget->second) {
            pass = false;
            if (!note.empty()) note += "; ";
            note += "over the " + std::to_string(budget->second) + "s budget";
        }
        if (!pass) ++failures;
        std::printf("%s criterion %2d %-20s cases=%-8lld %6.2fs%s%s\n",
                    pass ? "PASS" : "FAIL", criterion, r.name.c_str(), r.cases,
                    r.seconds, note.empty() ? "" : "  ", note.c_str());
        std::fflush(stdout);
    });
    std::printf("%d/%d criteria passed\n", criterion - failures, criterion);
    return failures;
}
