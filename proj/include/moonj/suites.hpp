#pragma once

#include <string>
#include <vector>

#include "moonj/precision.hpp"

namespace moonj {

// One named check with its observed evidence.  Suites never throw for a
// failed comparison; they throw only for malformed options.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteOptions {
    int digits = 50;
    long samples = 0;        // 0 selects each suite's default count
    unsigned long seed = 20260822;
};

// Exact-arithmetic checks: Fourier and elliptic expansion heads, the
// contour-oracle cross-check, the composed displays, and the zero-residual
// identity to high order.
std::vector<CheckResult> run_exact_suite(const SuiteOptions& opt);

// The three recorded evaluation walkthroughs: flat coordinate, half-plane
// argument, and j value, each against its printed digits.
std::vector<CheckResult> run_numeric_suite(const SuiteOptions& opt);

// All six angular-sector rows at sampled interior points, plus the
// discrimination check that every row rejects every other row's exponents.
std::vector<CheckResult> run_sector_suite(const SuiteOptions& opt);

// Connection and quadratic transformation identities over sampled parameter
// tuples, and the four closed-form flat-coordinate instances pointwise.
std::vector<CheckResult> run_transformation_suite(const SuiteOptions& opt);

// Half-period inversion coherence: j of the hypergeometric period ratio
// against the rational pullback formulas, plus the exact spot values.
std::vector<CheckResult> run_inversion_suite(const SuiteOptions& opt);

// Structural invariants: series round-trips, reversion identity, expansion
// gap zeros, Gamma reflection and duplication, disk-map round-trips, and
// modular invariance of the evaluator.
std::vector<CheckResult> run_property_suite(const SuiteOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace moonj
