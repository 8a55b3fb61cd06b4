#pragma once

// Named check suites comparing computed invariants against expected values.

#include <string>
#include <vector>

namespace gfc {

// Where an expected value comes from: "reference" (published result),
// "derived" (forced by other published data, e.g. rank-nullity) or
// "trivial" (holds by construction).
struct VerifyReport {
    std::string name;
    std::string expected;
    std::string source;
    std::string computed;
    bool pass = false;
    double elapsed_ms = 0;
};

// Suites: tables, gkf, main-theorem, genfun, all. Throws std::invalid_argument
// on an unknown name.
std::vector<VerifyReport> run_suite(const std::string& suite);
const std::vector<std::string>& suite_names();

}  // namespace gfc
