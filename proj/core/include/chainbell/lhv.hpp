#pragma once

// Brute-force local-hidden-variable oracle. Every stochastic LHV model is
// a convex mixture of deterministic outcome assignments, and both sides of
// the chained inequality are linear in the distribution, so exhaustively
// enumerating deterministic strategies certifies the classical bound. Link
// values per strategy are 0/1 counts, so the check is exact integer
// arithmetic.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chainbell/chain.hpp"

namespace chainbell {

// One outcome in 0..d-1 per local setting per party. Alice holds settings
// 0, 2, ..., Bob 1, 3, ...; the extended variant adds A_{2n}.
struct DeterministicStrategy {
    std::vector<int> aliceOutcomes;
    std::vector<int> bobOutcomes;
};

struct LhvCertificate {
    ChainScenario scenario;
    std::uint64_t strategiesChecked = 0;
    int maxMargin = 0;  // max over strategies of rhs - lhs (integer links)
    DeterministicStrategy witness;  // lowest-index strategy achieving it
};

class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Number of deterministic strategies: d^(2n), extended d^(2n+1).
std::uint64_t strategyCount(const ChainScenario& scenario);

// Per-strategy chain sides: each adjacent link contributes 1 iff the two
// assigned outcomes differ; rhs likewise for the closing pair.
std::pair<int, int> strategyChainValue(const DeterministicStrategy& strategy,
                                       const ChainScenario& scenario);

// Exhaustive enumeration (mixed-radix counters over the outcome
// assignments). Throws BudgetExceeded if strategyCount exceeds the budget.
LhvCertificate certifyClassicalBound(const ChainScenario& scenario,
                                     std::uint64_t budget = 10'000'000);

// Quantum chain margin minus the certified classical maximum; a positive
// value is the Bell-violation headline number.
double classicalVsQuantumGap(const ChainScenario& scenario,
                             std::uint64_t budget = 10'000'000);

}  // namespace chainbell
