#pragma once

// Finite-statistics simulation: seeded, reproducible draws from the exact
// joint tables and chain-margin estimates with standard errors. Per-link
// sub-seeds are derived from the master seed with splitmix64, so links can
// be sampled in any order (or in parallel) with identical results.

#include <cstdint>
#include <vector>

#include "chainbell/chain.hpp"

namespace chainbell {

struct SampleConfig {
    std::uint64_t seed = 0;
    std::uint64_t shotsPerLink = 1;
    ChainScenario scenario;
};

struct LinkEstimate {
    double estimate = 0.0;
    double stderror = 0.0;  // sqrt(p(1-p)/shots)
};

struct EstimateReport {
    std::vector<LinkEstimate> perLink;  // adjacent links in chain order
    LinkEstimate closing;
    double lhsEstimate = 0.0;
    double rhsEstimate = 0.0;
    double marginEstimate = 0.0;
    double marginStderr = 0.0;  // per-link errors combined in quadrature
};

std::uint64_t splitmix64(std::uint64_t x);

// Sub-seed of link `index` under master seed: splitmix64 over the
// golden-ratio-spread index.
std::uint64_t deriveSubSeed(std::uint64_t masterSeed, std::uint64_t index);

// Inverse-CDF sampling over the d^2 cells; returns row-major counts
// summing to `shots`. Identical seed gives identical counts.
std::vector<std::uint64_t> sampleJoint(const OutcomeJointDistribution& table,
                                       std::uint64_t shots, std::uint64_t seed);

double empiricalMismatch(const OutcomeJointDistribution& table,
                         const std::vector<std::uint64_t>& counts);

EstimateReport estimateChain(const SampleConfig& config);

}  // namespace chainbell
