// Acceptance gate: runs every verification suite and reports one line per
// criterion.  Exit status 0 only when all twelve pass.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "moonj/suites.hpp"

using namespace moonj;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::vector<std::string> checks;
};

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    SuiteOptions opt;  // digits 50, default sample counts, fixed seed

    std::map<std::string, CheckResult> results;
    for (const auto& runner : {run_exact_suite, run_numeric_suite, run_sector_suite,
                               run_transformation_suite, run_inversion_suite,
                               run_property_suite}) {
        for (CheckResult& r : runner(opt)) results[r.name] = r;
    }

    const std::vector<Criterion> criteria = {
        {1, "Fourier coefficients 196884 and 21493760 exact", {"fourier-head"}},
        {2, "hexagonal expansion head 13824, -39744, 1920024/35 exact", {"hexagonal-head"}},
        {3,
         "square expansion head exact and contour oracle reconstructs n <= 10",
         {"square-head", "square-contour-oracle"}},
        {4,
         "composed series match the displayed coefficients exactly",
         {"hexagonal-composed", "square-composed"}},
        {5, "hexagonal identity residual is the zero series through order 60",
         {"hexagonal-identity-60"}},
        {6, "walkthrough at t = sqrt(3)-1: flat value, argument (1+i)/2, j = 1728",
         {"walkthrough-hexagonal-sqrt3-1"}},
        {7, "walkthrough at t = 1/2: flat value, argument, j = 9261/8",
         {"walkthrough-hexagonal-half"}},
        {8, "square walkthrough at t = 1/3: flat value, argument, j = 1906624/225",
         {"walkthrough-square-third"}},
        {9,
         "transformation identities: sampled tuples to 1e-30 plus fixed-point closed forms",
         {"connection-identity-sampled", "quadratic-identity-sampled", "hexagonal-g-closed-form",
          "hexagonal-h-closed-form", "square-g-closed-form", "square-h-closed-form"}},
        {10,
         "inversion coherence to 1e-6 with exact spot values 1728 and 54000",
         {"quartic-spot-values", "cubic-spot-values", "quartic-coherence-sampled",
          "cubic-coherence-sampled"}},
        {11,
         "all six sector rows pass at three samples and reject every other row",
         {"sector-0-samples", "sector-1-samples", "sector-2-samples", "sector-3-samples",
          "sector-4-samples", "sector-5-samples", "sector-0-discrimination",
          "sector-1-discrimination", "sector-2-discrimination", "sector-3-discrimination",
          "sector-4-discrimination", "sector-5-discrimination"}},
        {12,
         "structural properties hold with zero counterexamples",
         {"series-mul-div-roundtrip", "series-reversion-identity", "expansion-gap-zeros",
          "gamma-reflection", "gamma-duplication", "disk-map-roundtrip", "fourier-invariance",
          "square-identity-40"}},
    };

    int passed = 0;
    for (const Criterion& c : criteria) {
        bool ok = true;
        std::string failing;
        for (const std::string& name : c.checks) {
            auto it = results.find(name);
            if (it == results.end() || !it->second.pass) {
                ok = false;
                failing += (failing.empty() ? "" : ", ") + name;
                if (it != results.end()) failing += " (" + it->second.detail + ")";
            }
        }
        if (ok) ++passed;
        std::printf("criterion %2d: %s - %s%s%s\n", c.number, ok ? "PASS" : "FAIL",
                    c.description.c_str(), ok ? "" : "; failing: ",
                    ok ? "" : failing.c_str());
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::printf("%d/12 criteria passed in %.1f s\n", passed,
                static_cast<double>(elapsed) / 1000.0);
    return passed == 12 ? 0 : 1;
}
