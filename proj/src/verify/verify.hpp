#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebra/structure_algebra.hpp"
#include "support/parallel.hpp"

namespace latzeta::verify {

struct RunConfig {
    int i_max = 6;             // count window (clamped to 4 when n = 4)
    int k_max = 8;             // c_k window
    int type_budget = 4;       // cell sweep: index exponent bound
    int precision = 8;         // K for homogeneity and igusa reports
    int workers = 0;           // 0 = hardware concurrency
    uint64_t budget = 10000000;  // point-sweep budget
    int fit_max_a = 4;
    int fit_max_b = 3;
    int fit_max_mult = 3;
    uint64_t seed = 20240001;  // randomized spot checks
};

enum class SuiteStatus { Pass, Fail, Refused };

struct SuiteResult {
    SuiteStatus status = SuiteStatus::Pass;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what);
    void note(const std::string& what);
    void refuse(const std::string& why);
    std::string text() const;
};

std::vector<std::string> suite_names();

// Runs one verification suite.  Suites that need an algebra refuse when the
// preconditions do not hold; igusa-suite ignores the algebra argument.
SuiteResult run_suite(const std::string& suite, const algebra::StructureAlgebra* a,
                      const RunConfig& cfg, const Parallel& par);

}  // namespace latzeta::verify
