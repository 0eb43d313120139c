#pragma once

// Exact quantum predictions on the maximally entangled d-dimensional state
// (1/sqrt(d)) sum_k |kk>. For an orthogonal net rotation U between the two
// measured bases the joint outcome table is P(i, j) = U(i, j)^2 / d, so a
// whole setting ladder reduces to powers of one step rotation.

#include <numbers>

#include "chainbell/rotations.hpp"
#include "chainbell/separation.hpp"

namespace chainbell {

enum class ChainVariant {
    standard,  // closing link (A_0, B_{2n-1}), step denominator 2n-1
    extended,  // closing link (A_0, A_{2n}),   step denominator 2n
};

const char* variantName(ChainVariant v);

struct MaxEntangledState {
    int d = 2;
};

// Ladder of 2n alternating settings (extended: plus A_{2n}); setting k is
// conjugation of the computational-basis observable by U(theta)^k.
struct SettingLadder {
    int d = 2;
    int n = 1;
    ChainVariant variant = ChainVariant::standard;

    int settingCount() const {
        return 2 * n + (variant == ChainVariant::extended ? 1 : 0);
    }
    // Terminal power turning the step rotation into a basis permutation.
    int terminalPower() const {
        return variant == ChainVariant::standard ? 2 * n - 1 : 2 * n;
    }
    double theta1() const { return std::numbers::pi / (2.0 * terminalPower()); }
    double theta2() const {
        return 2.0 * std::numbers::pi / (3.0 * terminalPower());
    }
    RotationSpec stepSpec() const {
        return RotationSpec::canonical(d, theta1(), theta2());
    }
};

// P(i, j) = (1/d) * effectiveRotation(i, j)^2.
OutcomeJointDistribution jointTable(const MaxEntangledState& state,
                                    const Eigen::MatrixXd& effectiveRotation);

// Checks that rotating Bob's basis by U^T produces the same joint table as
// rotating Alice's by U (the transfer identity for real rotations),
// computed through explicit two-party amplitudes.
bool transferIdentityCheck(const MaxEntangledState& state,
                           const Eigen::MatrixXd& u, double tol = 1e-12);

// Net single-party rotation for a chain link. Adjacent links (|i-j| = 1)
// reduce to the single step U(theta); the closing link is the terminal
// power. Throws std::invalid_argument for any other pair.
Eigen::MatrixXd pairEffectiveRotation(const SettingLadder& ladder, int i, int j);

// Mismatch probability of a chain link's joint table.
double linkMismatch(const SettingLadder& ladder, int i, int j);

}  // namespace chainbell
