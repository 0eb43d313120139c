#include "chainbell/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace chainbell {

std::vector<std::pair<int, int>> chainLinks(const ChainScenario& scenario) {
    if (scenario.n < 1 || scenario.d < 2)
        throw std::invalid_argument("chainLinks: need n >= 1 and d >= 2");
    const int count = scenario.variant == ChainVariant::standard
                          ? 2 * scenario.n - 1
                          : 2 * scenario.n;
    std::vector<std::pair<int, int>> links;
    links.reserve(count);
    for (int k = 0; k < count; ++k) {
        if (k % 2 == 0)
            links.emplace_back(k, k + 1);  // (A_k, B_{k+1})
        else
            links.emplace_back(k + 1, k);  // (A_{k+1}, B_k)
    }
    return links;
}

ChainReport evaluateChain(const ChainScenario& scenario) {
    const SettingLadder ladder = scenario.ladder();
    ChainReport report;
    report.scenario = scenario;
    for (const auto& [i, j] : chainLinks(scenario)) {
        report.linkValues.push_back(linkMismatch(ladder, i, j));
        report.lhs += report.linkValues.back();
    }
    const int closingPartner = scenario.variant == ChainVariant::standard
                                   ? 2 * scenario.n - 1
                                   : 2 * scenario.n;
    report.rhs = linkMismatch(ladder, 0, closingPartner);
    report.margin = report.rhs - report.lhs;
    report.violated = report.margin > kViolationTol;
    if (scenario.variant == ChainVariant::standard)
        report.closedForm = closedFormLHS(scenario.d, scenario.settings());
    return report;
}

double closedFormLHS(int d, int N, ChainVariant variant) {
    if (variant != ChainVariant::standard)
        throw std::invalid_argument(
            "closedFormLHS: no closed form for the extended variant");
    if (d < 2 || N < 2 || N % 2 != 0)
        throw std::invalid_argument("closedFormLHS: need d >= 2 and even N >= 2");
    const BlockDecomposition b = canonicalDecomposition(d);
    const double theta1 = std::numbers::pi / (2.0 * (N - 1));
    const double theta2 = 2.0 * std::numbers::pi / (3.0 * (N - 1));
    const double c1 = std::cos(theta1);
    const double q = 1.0 + 2.0 * std::cos(theta2);
    const double perLink = 1.0 - (2.0 * b.m * c1 * c1 + b.s * q * q / 3.0) / d;
    return (N - 1) * perLink;
}

std::optional<int> minimalViolatingN(int d, int cap) {
    if (d < 2)
        throw std::invalid_argument("minimalViolatingN: dimension must be >= 2");
    for (int N = 2; N <= cap; N += 2) {
        const ChainReport report =
            evaluateChain(ChainScenario{d, N / 2, ChainVariant::standard});
        if (report.violated) return N;
    }
    return std::nullopt;
}

std::vector<ChainReport> zenoLimitTrace(int d, const std::vector<int>& nList) {
    std::vector<ChainReport> reports;
    reports.reserve(nList.size());
    for (int n : nList)
        reports.push_back(evaluateChain(ChainScenario{d, n, ChainVariant::extended}));
    return reports;
}

}  // namespace chainbell
