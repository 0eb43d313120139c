#include "chainbell/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace chainbell {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t deriveSubSeed(std::uint64_t masterSeed, std::uint64_t index) {
    return splitmix64(masterSeed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

std::vector<std::uint64_t> sampleJoint(const OutcomeJointDistribution& table,
                                       std::uint64_t shots, std::uint64_t seed) {
    const int d = table.dim();
    std::vector<double> cdf(static_cast<std::size_t>(d) * d);
    double acc = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            acc += table.p(i, j);
            cdf[static_cast<std::size_t>(i) * d + j] = acc;
        }
    cdf.back() = 1.0;  // guard against rounding in the last cell

    std::vector<std::uint64_t> counts(cdf.size(), 0);
    std::mt19937_64 rng(seed);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        // 53-bit uniform in [0, 1); avoids distribution-object portability
        // differences across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        ++counts[static_cast<std::size_t>(it - cdf.begin())];
    }
    return counts;
}

double empiricalMismatch(const OutcomeJointDistribution& table,
                         const std::vector<std::uint64_t>& counts) {
    const int d = table.dim();
    if (counts.size() != static_cast<std::size_t>(d) * d)
        throw std::invalid_argument("empiricalMismatch: counts size mismatch");
    std::uint64_t total = 0;
    std::uint64_t diagonal = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            total += counts[static_cast<std::size_t>(i) * d + j];
            if (i == j) diagonal += counts[static_cast<std::size_t>(i) * d + j];
        }
    if (total == 0) throw std::invalid_argument("empiricalMismatch: no shots");
    return 1.0 - static_cast<double>(diagonal) / static_cast<double>(total);
}

EstimateReport estimateChain(const SampleConfig& config) {
    if (config.shotsPerLink < 1)
        throw std::invalid_argument("estimateChain: shotsPerLink must be >= 1");
    const SettingLadder ladder = config.scenario.ladder();
    const MaxEntangledState state{config.scenario.d};
    const auto links = chainLinks(config.scenario);

    EstimateReport report;
    double variance = 0.0;
    std::uint64_t subIndex = 0;
    auto estimateLink = [&](int i, int j) {
        const OutcomeJointDistribution table =
            jointTable(state, pairEffectiveRotation(ladder, i, j));
        const auto counts =
            sampleJoint(table, config.shotsPerLink,
                        deriveSubSeed(config.seed, subIndex++));
        const double p = empiricalMismatch(table, counts);
        const double se =
            std::sqrt(p * (1.0 - p) / static_cast<double>(config.shotsPerLink));
        variance += se * se;
        return LinkEstimate{p, se};
    };

    for (const auto& [i, j] : links) {
        report.perLink.push_back(estimateLink(i, j));
        report.lhsEstimate += report.perLink.back().estimate;
    }
    const int closingPartner = config.scenario.variant == ChainVariant::standard
                                   ? 2 * config.scenario.n - 1
                                   : 2 * config.scenario.n;
    report.closing = estimateLink(0, closingPartner);
    report.rhsEstimate = report.closing.estimate;
    report.marginEstimate = report.rhsEstimate - report.lhsEstimate;
    report.marginStderr = std::sqrt(variance);
    return report;
}

}  // namespace chainbell
