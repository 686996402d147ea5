#pragma once

#include <string>
#include <vector>

#include "ramicalc/betti_bounds.hpp"
#include "ramicalc/rat.hpp"

namespace ramicalc {

struct CheckResult {
    std::string name;
    bool passed;
};

struct SuiteReport {
    std::string suite;
    bool passed = true;
    std::vector<CheckResult> checks;
    // Set for the closed-form-chain suite; carries the per-step detail.
    ChainReport chain;

    void record(const std::string& name, bool ok) {
        checks.push_back({name, ok});
        passed = passed && ok;
    }
};

// Coefficient-dominance certification of the b <= c <= closed-form chain
// for 3 <= n <= n_max, plus a grid sampling of closed_form - b_n.
SuiteReport run_appendix_suite(int n_max, const std::vector<Rat>& grid);

// Degree and integrality of the recursive family, and the closed-form
// product-sheaf Betti numbers staying under the bound.
SuiteReport run_sharpness_suite();

// Randomized structural invariants of the conductor calculus, the
// divisor/ledger algebra and the curve formulas. Fixed seed, so the
// report is deterministic.
SuiteReport run_invariants_suite(unsigned seed = 20260810);

} // namespace ramicalc
