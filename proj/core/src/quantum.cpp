#include "chainbell/quantum.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace chainbell {

const char* variantName(ChainVariant v) {
    return v == ChainVariant::standard ? "standard" : "extended";
}

OutcomeJointDistribution jointTable(const MaxEntangledState& state,
                                    const Eigen::MatrixXd& effectiveRotation) {
    if (effectiveRotation.rows() != state.d || effectiveRotation.cols() != state.d)
        throw std::invalid_argument("jointTable: rotation dimension mismatch");
    if (!isOrthogonal(effectiveRotation, 1e-10))
        throw std::invalid_argument("jointTable: rotation is not orthogonal");
    Eigen::MatrixXd table =
        effectiveRotation.cwiseProduct(effectiveRotation) / state.d;
    return OutcomeJointDistribution(std::move(table));
}

bool transferIdentityCheck(const MaxEntangledState& state,
                           const Eigen::MatrixXd& u, double tol) {
    if (u.rows() != state.d || u.cols() != state.d)
        throw std::invalid_argument("transferIdentityCheck: dimension mismatch");
    const int d = state.d;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    // <i j| (I x U^T) |psi> vs <i j| (U x I) |psi>, probabilities compared.
    const Eigen::MatrixXd ut = u.transpose();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double ampBob = 0.0;
            double ampAlice = 0.0;
            for (int k = 0; k < d; ++k) {
                // |psi> = norm * sum_k |k>_A |k>_B
                ampBob += (i == k ? 1.0 : 0.0) * ut(j, k) * norm;
                ampAlice += u(i, k) * (j == k ? 1.0 : 0.0) * norm;
            }
            if (std::abs(ampBob * ampBob - ampAlice * ampAlice) > tol)
                return false;
        }
    return true;
}

namespace {

bool isAdjacentLink(const SettingLadder& ladder, int i, int j) {
    const int maxAlice =
        ladder.variant == ChainVariant::extended ? 2 * ladder.n : 2 * ladder.n - 2;
    const int maxBob = 2 * ladder.n - 1;
    if (i % 2 != 0 || j % 2 != 1) return false;
    if (i < 0 || i > maxAlice || j < 1 || j > maxBob) return false;
    return std::abs(i - j) == 1;
}

bool isClosingLink(const SettingLadder& ladder, int i, int j) {
    if (i != 0) return false;
    return j == (ladder.variant == ChainVariant::standard ? 2 * ladder.n - 1
                                                          : 2 * ladder.n);
}

}  // namespace

Eigen::MatrixXd pairEffectiveRotation(const SettingLadder& ladder, int i, int j) {
    const RotationSpec step = ladder.stepSpec();
    // U_A^k x U_B^l settings on |psi> collapse to the |k - l|-th power of the
    // step on one side; adjacent links always leave a single step.
    if (isAdjacentLink(ladder, i, j)) return buildRotation(step);
    if (isClosingLink(ladder, i, j))
        return rotationPower(step, ladder.terminalPower());
    throw std::invalid_argument("pairEffectiveRotation: not a chain link");
}

double linkMismatch(const SettingLadder& ladder, int i, int j) {
    const MaxEntangledState state{ladder.d};
    return mismatchProbability(jointTable(state, pairEffectiveRotation(ladder, i, j)));
}

}  // namespace chainbell
