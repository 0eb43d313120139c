#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chainbell/lhv.hpp"
#include "chainbell/sampler.hpp"

using namespace chainbell;

TEST_CASE("sub-seed derivation is stable and spreads") {
    CHECK(deriveSubSeed(42, 0) == deriveSubSeed(42, 0));
    CHECK(deriveSubSeed(42, 0) != deriveSubSeed(42, 1));
    CHECK(deriveSubSeed(42, 0) != deriveSubSeed(43, 0));
}

TEST_CASE("sampling a diagonal table never leaves the diagonal") {
    const auto table =
        jointTable(MaxEntangledState{3}, Eigen::MatrixXd::Identity(3, 3));
    const auto counts = sampleJoint(table, 10'000, 123);
    std::uint64_t total = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i != j) CHECK(counts[i * 3 + j] == 0);
            total += counts[i * 3 + j];
        }
    CHECK(total == 10'000);
}

TEST_CASE("sampling a permutation table never hits the diagonal") {
    const auto table = jointTable(
        MaxEntangledState{3},
        buildRotation(RotationSpec::canonical(3, 0, 2.0 * std::numbers::pi / 3.0)));
    const auto counts = sampleJoint(table, 10'000, 7);
    for (int i = 0; i < 3; ++i) CHECK(counts[i * 3 + i] == 0);
}

TEST_CASE("identical seeds give identical counts") {
    const auto table = jointTable(
        MaxEntangledState{3},
        buildRotation(RotationSpec::canonical(3, 0, 2.0 * std::numbers::pi / 9.0)));
    CHECK(sampleJoint(table, 50'000, 99) == sampleJoint(table, 50'000, 99));
    CHECK(sampleJoint(table, 50'000, 99) != sampleJoint(table, 50'000, 100));
}

TEST_CASE("empirical mismatch converges to the exact value") {
    const auto table = jointTable(
        MaxEntangledState{3},
        buildRotation(RotationSpec::canonical(3, 0, 2.0 * std::numbers::pi / 9.0)));
    const double exact = mismatchProbability(table);
    const std::uint64_t shots = 1'000'000;
    const auto counts = sampleJoint(table, shots, 2024);
    const double estimate = empiricalMismatch(table, counts);
    const double se = std::sqrt(exact * (1.0 - exact) / shots);
    CHECK(std::abs(estimate - exact) < 5.0 * se);
}

TEST_CASE("chain estimate is reproducible and near the exact margin") {
    const SampleConfig config{42, 1'000'000, ChainScenario{3, 2}};
    const EstimateReport a = estimateChain(config);
    const EstimateReport b = estimateChain(config);
    CHECK(a.marginEstimate == b.marginEstimate);
    CHECK(a.lhsEstimate == b.lhsEstimate);
    REQUIRE(a.perLink.size() == b.perLink.size());
    for (std::size_t k = 0; k < a.perLink.size(); ++k)
        CHECK(a.perLink[k].estimate == b.perLink[k].estimate);

    const double exactGap = classicalVsQuantumGap(ChainScenario{3, 2});
    CHECK(std::abs(a.marginEstimate - exactGap) < 5.0 * a.marginStderr);

    // Closing link is an exact permutation: estimate 1, no variance.
    CHECK(a.rhsEstimate == doctest::Approx(1.0));
    CHECK(a.closing.stderror == doctest::Approx(0.0));
}

TEST_CASE("single-shot estimates are 0/1 per link") {
    const SampleConfig config{5, 1, ChainScenario{3, 2}};
    const EstimateReport report = estimateChain(config);
    for (const LinkEstimate& link : report.perLink)
        CHECK((link.estimate == 0.0 || link.estimate == 1.0));
}

TEST_CASE("shot and shape validation") {
    CHECK_THROWS_AS(estimateChain(SampleConfig{0, 0, ChainScenario{3, 2}}),
                    std::invalid_argument);
    const auto table =
        jointTable(MaxEntangledState{2}, Eigen::MatrixXd::Identity(2, 2));
    CHECK_THROWS_AS(empiricalMismatch(table, std::vector<std::uint64_t>(3, 0)),
                    std::invalid_argument);
}
