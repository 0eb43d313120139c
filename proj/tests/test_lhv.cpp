#include <doctest.h>

#include "chainbell/lhv.hpp"

using namespace chainbell;

TEST_CASE("strategy counts") {
    CHECK(strategyCount(ChainScenario{2, 2, ChainVariant::standard}) == 16);
    CHECK(strategyCount(ChainScenario{3, 3, ChainVariant::standard}) == 729);
    CHECK(strategyCount(ChainScenario{3, 2, ChainVariant::extended}) == 243);
}

TEST_CASE("strategy chain values") {
    const ChainScenario scenario{2, 2, ChainVariant::standard};

    // All-equal outcomes saturate equality at 0.
    const auto [lhs0, rhs0] =
        strategyChainValue(DeterministicStrategy{{1, 1}, {1, 1}}, scenario);
    CHECK(lhs0 == 0);
    CHECK(rhs0 == 0);

    // alice=(0,0), bob=(1,1): all three links differ, closing pair differs.
    const auto [lhs1, rhs1] =
        strategyChainValue(DeterministicStrategy{{0, 0}, {1, 1}}, scenario);
    CHECK(lhs1 == 3);
    CHECK(rhs1 == 1);

    // Degenerate n=1 chain: the single link is the closing pair.
    const auto [lhs2, rhs2] = strategyChainValue(
        DeterministicStrategy{{0}, {1}}, ChainScenario{3, 1, ChainVariant::standard});
    CHECK(lhs2 == 1);
    CHECK(rhs2 == 1);

    CHECK_THROWS_AS(strategyChainValue(DeterministicStrategy{{0}, {1}}, scenario),
                    std::invalid_argument);
}

TEST_CASE("classical bound certificates") {
    for (const auto& [d, n] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {3, 1}}) {
        const ChainScenario scenario{d, n, ChainVariant::standard};
        const LhvCertificate cert = certifyClassicalBound(scenario);
        CHECK(cert.maxMargin == 0);
        CHECK(cert.strategiesChecked == strategyCount(scenario));
        // Lowest-index maximizer is the all-zero (all-equal) strategy.
        for (int a : cert.witness.aliceOutcomes) CHECK(a == 0);
        for (int b : cert.witness.bobOutcomes) CHECK(b == 0);
    }
}

TEST_CASE("extended variant is also classically bounded") {
    const LhvCertificate cert =
        certifyClassicalBound(ChainScenario{3, 2, ChainVariant::extended});
    CHECK(cert.maxMargin == 0);
    CHECK(cert.strategiesChecked == 243);
    CHECK(cert.witness.aliceOutcomes.size() == 3);
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(certifyClassicalBound(ChainScenario{3, 20}), BudgetExceeded);
    CHECK_THROWS_AS(certifyClassicalBound(ChainScenario{2, 2}, 8), BudgetExceeded);
}

TEST_CASE("classical vs quantum gap") {
    CHECK(classicalVsQuantumGap(ChainScenario{3, 2}) ==
          doctest::Approx(0.137159).epsilon(1e-5));
    CHECK(classicalVsQuantumGap(ChainScenario{4, 2}) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(classicalVsQuantumGap(ChainScenario{3, 1}) ==
          doctest::Approx(0.0).epsilon(1e-12));
}
