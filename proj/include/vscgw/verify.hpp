#pragma once

#include <string>
#include <vector>

#include "vscgw/mirror.hpp"

namespace vscgw {

struct SuiteReport {
    std::string name;
    unsigned checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

struct GridBounds {
    unsigned k_max = 6;
    unsigned d_max = 3;
    unsigned threads = 0;  // 0: one worker per hardware thread
};

// Both pipelines agree at every in-window (N, k, d, n) with k <= k_max,
// 3 <= N <= 2k+2, d <= d_max.
SuiteReport verify_theorem1_suite(const GridBounds& bounds = {});

// Window reflection on the same grid.
SuiteReport verify_reflection_suite(const GridBounds& bounds = {});

// Two-point comparison for one (N, k, d): every report must balance.
SuiteReport verify_theorem2_instance(unsigned N, unsigned k, unsigned d);

// The standing instance list: k > N at each degree, Calabi-Yau, boundary.
SuiteReport verify_theorem2_suite();

// Kernel and decomposition identities as exact rational-function zeroes.
SuiteReport verify_identities();

// Fixed-point sums against iterated residues, plus seed independence.
SuiteReport verify_localization_suite(const GridBounds& bounds = {});

// N >= k+2: the transform degenerates to the constants themselves.
SuiteReport verify_fano_collapse_suite();

}  // namespace vscgw
