#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chainbell/quantum.hpp"

using namespace chainbell;
using std::numbers::pi;

TEST_CASE("identity rotation gives the perfectly correlated table") {
    for (int d : {2, 3, 5}) {
        const auto table =
            jointTable(MaxEntangledState{d}, Eigen::MatrixXd::Identity(d, d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                CHECK(table.p(i, j) ==
                      doctest::Approx(i == j ? 1.0 / d : 0.0).epsilon(1e-15));
    }
}

TEST_CASE("d=3 permutation rotation gives zero diagonal and full mismatch") {
    const auto table = jointTable(
        MaxEntangledState{3},
        buildRotation(RotationSpec::canonical(3, 0, 2.0 * pi / 3.0)));
    for (int i = 0; i < 3; ++i) CHECK(table.p(i, i) == doctest::Approx(0.0));
    CHECK(mismatchProbability(table) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("d=3 step table diagonal matches squared matrix entries") {
    const double theta = 2.0 * pi / 9.0;
    const Eigen::MatrixXd u = buildRotation(RotationSpec::canonical(3, 0, theta));
    const auto table = jointTable(MaxEntangledState{3}, u);
    const double x = (1.0 + 2.0 * std::cos(theta)) / 3.0;
    for (int i = 0; i < 3; ++i)
        CHECK(table.p(i, i) == doctest::Approx(x * x / 3.0).epsilon(1e-12));
}

TEST_CASE("joint table rejects non-orthogonal or mismatched input") {
    CHECK_THROWS_AS(
        jointTable(MaxEntangledState{3}, Eigen::MatrixXd::Identity(4, 4)),
        std::invalid_argument);
    CHECK_THROWS_AS(
        jointTable(MaxEntangledState{2}, Eigen::MatrixXd::Constant(2, 2, 0.9)),
        std::invalid_argument);
}

TEST_CASE("joint tables have uniform marginals") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 7);
        const auto table = jointTable(
            MaxEntangledState{d},
            buildRotation(RotationSpec::canonical(d, angle(rng), angle(rng))));
        for (int k = 0; k < d; ++k) {
            CHECK(table.rowMarginal(k) == doctest::Approx(1.0 / d).epsilon(1e-12));
            CHECK(table.colMarginal(k) == doctest::Approx(1.0 / d).epsilon(1e-12));
        }
    }
}

TEST_CASE("transfer identity holds for random rotations, d <= 8") {
    CHECK(transferIdentityCheck(MaxEntangledState{3},
                                Eigen::MatrixXd::Identity(3, 3)));
    CHECK(transferIdentityCheck(
        MaxEntangledState{3},
        buildRotation(RotationSpec::canonical(3, 0, 2.0 * pi / 9.0))));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-pi, pi);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 7);
        CHECK(transferIdentityCheck(
            MaxEntangledState{d},
            buildRotation(RotationSpec::canonical(d, angle(rng), angle(rng)))));
    }
}

TEST_CASE("pair effective rotation: adjacent links reduce to one step") {
    const SettingLadder ladder{3, 3, ChainVariant::standard};
    const Eigen::MatrixXd step = buildRotation(ladder.stepSpec());
    CHECK((pairEffectiveRotation(ladder, 0, 1) - step).cwiseAbs().maxCoeff() <
          1e-15);
    CHECK((pairEffectiveRotation(ladder, 2, 1) - step).cwiseAbs().maxCoeff() <
          1e-15);
    CHECK((pairEffectiveRotation(ladder, 4, 5) - step).cwiseAbs().maxCoeff() <
          1e-15);
}

TEST_CASE("closing link is the terminal permutation") {
    const SettingLadder ladder{3, 2, ChainVariant::standard};
    const Eigen::MatrixXd closing = pairEffectiveRotation(ladder, 0, 3);
    const Eigen::MatrixXd perm =
        buildRotation(RotationSpec::canonical(3, 0, 2.0 * pi / 3.0));
    CHECK((closing - perm).cwiseAbs().maxCoeff() < 1e-12);

    const SettingLadder extended{3, 2, ChainVariant::extended};
    CHECK(isZeroDiagonalPermutation(pairEffectiveRotation(extended, 0, 4)));
}

TEST_CASE("non-links are rejected") {
    const SettingLadder ladder{3, 2, ChainVariant::standard};
    CHECK_THROWS_AS(pairEffectiveRotation(ladder, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(pairEffectiveRotation(ladder, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(pairEffectiveRotation(ladder, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(pairEffectiveRotation(ladder, 0, 4), std::invalid_argument);
}

TEST_CASE("all adjacent links share one mismatch value") {
    for (int d : {2, 3, 5, 7}) {
        const SettingLadder ladder{d, 3, ChainVariant::standard};
        const double first = linkMismatch(ladder, 0, 1);
        for (int k = 1; k < 2 * ladder.n - 1; ++k) {
            const int i = (k % 2 == 0) ? k : k + 1;
            const int j = (k % 2 == 0) ? k + 1 : k;
            CHECK(linkMismatch(ladder, i, j) ==
                  doctest::Approx(first).epsilon(1e-15));
        }
    }
}

TEST_CASE("d=3, N=2 adjacent link has mismatch 1") {
    const SettingLadder ladder{3, 1, ChainVariant::standard};
    CHECK(linkMismatch(ladder, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("per-dimension closed forms for the adjacent-link mismatch") {
    for (int n = 1; n <= 20; ++n) {
        const double theta1 = pi / (2.0 * (2 * n - 1));
        const double theta2 = 2.0 * pi / (3.0 * (2 * n - 1));

        const SettingLadder d2{2, n, ChainVariant::standard};
        CHECK(linkMismatch(d2, 0, 1) ==
              doctest::Approx(std::pow(std::sin(theta1), 2)).epsilon(1e-12));

        const SettingLadder d3{3, n, ChainVariant::standard};
        CHECK(linkMismatch(d3, 0, 1) ==
              doctest::Approx((8.0 * std::pow(std::sin(theta2 / 2), 2) +
                               4.0 * std::pow(std::sin(theta2), 2)) /
                              9.0)
                  .epsilon(1e-12));

        const SettingLadder d4{4, n, ChainVariant::standard};
        CHECK(linkMismatch(d4, 0, 1) ==
              doctest::Approx(std::pow(std::sin(theta1), 2)).epsilon(1e-12));

        const SettingLadder d5{5, n, ChainVariant::standard};
        const double q = 1.0 + 2.0 * std::cos(theta2);
        CHECK(linkMismatch(d5, 0, 1) ==
              doctest::Approx(1.0 - (2.0 * std::pow(std::cos(theta1), 2) +
                                     q * q / 3.0) /
                                        5.0)
                  .epsilon(1e-12));
    }
}
