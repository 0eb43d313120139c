#include "chainbell/lhv.hpp"

#include <limits>

namespace chainbell {

std::uint64_t strategyCount(const ChainScenario& scenario) {
    const int aliceSettings =
        scenario.n + (scenario.variant == ChainVariant::extended ? 1 : 0);
    const int settings = aliceSettings + scenario.n;
    std::uint64_t count = 1;
    for (int i = 0; i < settings; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / scenario.d)
            return std::numeric_limits<std::uint64_t>::max();
        count *= static_cast<std::uint64_t>(scenario.d);
    }
    return count;
}

std::pair<int, int> strategyChainValue(const DeterministicStrategy& strategy,
                                       const ChainScenario& scenario) {
    const std::size_t aliceSettings =
        scenario.n + (scenario.variant == ChainVariant::extended ? 1 : 0);
    if (strategy.aliceOutcomes.size() != aliceSettings ||
        strategy.bobOutcomes.size() != static_cast<std::size_t>(scenario.n))
        throw std::invalid_argument("strategyChainValue: strategy shape mismatch");

    int lhs = 0;
    for (const auto& [i, j] : chainLinks(scenario))
        lhs += strategy.aliceOutcomes[i / 2] != strategy.bobOutcomes[(j - 1) / 2];

    int rhs = 0;
    if (scenario.variant == ChainVariant::standard)
        rhs = strategy.aliceOutcomes[0] != strategy.bobOutcomes[scenario.n - 1];
    else
        rhs = strategy.aliceOutcomes[0] != strategy.aliceOutcomes[scenario.n];
    return {lhs, rhs};
}

LhvCertificate certifyClassicalBound(const ChainScenario& scenario,
                                     std::uint64_t budget) {
    const std::uint64_t total = strategyCount(scenario);
    if (total > budget)
        throw BudgetExceeded("certifyClassicalBound: " + std::to_string(total) +
                             " strategies exceed budget of " +
                             std::to_string(budget));

    const int aliceSettings =
        scenario.n + (scenario.variant == ChainVariant::extended ? 1 : 0);
    const int settings = aliceSettings + scenario.n;

    DeterministicStrategy strategy;
    strategy.aliceOutcomes.assign(aliceSettings, 0);
    strategy.bobOutcomes.assign(scenario.n, 0);

    LhvCertificate cert;
    cert.scenario = scenario;
    cert.strategiesChecked = total;
    cert.maxMargin = std::numeric_limits<int>::min();

    // Mixed-radix counter: Alice digits first, then Bob's. Ties keep the
    // lowest strategy index, so the result is chunking-independent.
    std::vector<int> digits(settings, 0);
    for (std::uint64_t index = 0; index < total; ++index) {
        const auto [lhs, rhs] = strategyChainValue(strategy, scenario);
        if (rhs - lhs > cert.maxMargin) {
            cert.maxMargin = rhs - lhs;
            cert.witness = strategy;
        }
        for (int pos = settings - 1; pos >= 0; --pos) {
            if (++digits[pos] < scenario.d) {
                break;
            }
            digits[pos] = 0;
        }
        for (int i = 0; i < aliceSettings; ++i)
            strategy.aliceOutcomes[i] = digits[i];
        for (int i = 0; i < scenario.n; ++i)
            strategy.bobOutcomes[i] = digits[aliceSettings + i];
    }
    return cert;
}

double classicalVsQuantumGap(const ChainScenario& scenario, std::uint64_t budget) {
    const LhvCertificate cert = certifyClassicalBound(scenario, budget);
    const ChainReport report = evaluateChain(scenario);
    return report.margin - cert.maxMargin;
}

}  // namespace chainbell
