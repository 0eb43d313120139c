#pragma once

// Chained-inequality evaluation: sum of adjacent-link mismatch
// probabilities against the closing-link mismatch, in the standard and
// extended (Zeno) variants, plus the per-dimension closed forms.

#include <optional>
#include <utility>
#include <vector>

#include "chainbell/quantum.hpp"

namespace chainbell {

inline constexpr double kViolationTol = 1e-12;

struct ChainScenario {
    int d = 2;
    int n = 1;
    ChainVariant variant = ChainVariant::standard;

    int settings() const { return 2 * n; }
    SettingLadder ladder() const { return SettingLadder{d, n, variant}; }
};

struct ChainReport {
    ChainScenario scenario;
    std::vector<double> linkValues;  // adjacent links in chain order
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs; > kViolationTol means violation
    bool violated = false;
    std::optional<double> closedForm;  // standard variant only
};

// Adjacent link pairs in chain order: (0,1), (2,1), (2,3), (4,3), ...
// Standard: 2n-1 links; extended: 2n links ending at (2n, 2n-1).
std::vector<std::pair<int, int>> chainLinks(const ChainScenario& scenario);

ChainReport evaluateChain(const ChainScenario& scenario);

// (N-1) * [1 - (1/d)(2m cos^2(pi/(2(N-1))) + (s/3)(1 + 2cos(2pi/(3(N-1))))^2)]
// with (m, s) the canonical decomposition of d. Standard variant only;
// throws std::invalid_argument for the extended variant.
double closedFormLHS(int d, int N,
                     ChainVariant variant = ChainVariant::standard);

// Smallest even N >= 2 whose standard chain is violated; nullopt if none
// up to the cap.
std::optional<int> minimalViolatingN(int d, int cap = 1000);

// Extended-variant reports for the given half-chain counts; the LHS decays
// toward 0 while the closing permutation keeps the RHS at 1.
std::vector<ChainReport> zenoLimitTrace(int d, const std::vector<int>& nList);

}  // namespace chainbell
