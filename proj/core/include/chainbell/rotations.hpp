#pragma once

// Block-orthogonal setting rotations: m qubit-like 2x2 rotation blocks
// followed by s qutrit-like circulant 3x3 blocks, tiling dimension
// d = 2m + 3s. Powers of one such rotation generate the whole setting
// ladder; at the chain angles the terminal power is a zero-diagonal
// signed permutation.

#include <Eigen/Dense>

namespace chainbell {

struct BlockDecomposition {
    int d = 0;
    int m = 0;  // 2x2 blocks
    int s = 0;  // 3x3 blocks
};

// Even d -> (m = d/2, s = 0); odd d -> (m = (d-3)/2, s = 1).
// Throws std::invalid_argument for d < 2.
BlockDecomposition canonicalDecomposition(int d);

struct RotationSpec {
    BlockDecomposition blocks;
    double theta1 = 0.0;  // 2x2-block angle
    double theta2 = 0.0;  // 3x3-block angle

    static RotationSpec canonical(int d, double theta1, double theta2) {
        return RotationSpec{canonicalDecomposition(d), theta1, theta2};
    }
};

// Block-diagonal rotation: m blocks [[c, s], [-s, c]] with c = cos(theta1),
// s = sin(theta1), then s circulant blocks [[x, y, z], [z, x, y], [y, z, x]]
// with x = (1 + 2 cos t)/3, y = (1 - cos t - sqrt(3) sin t)/3,
// z = (1 - cos t + sqrt(3) sin t)/3 at t = theta2.
// The circulant block is a rotation about the (1,1,1) axis, so powers add
// angles block by block.
Eigen::MatrixXd buildRotation(const RotationSpec& spec);

// U(theta)^k by repeated multiplication; equals
// buildRotation(k*theta1, k*theta2) by angle additivity.
Eigen::MatrixXd rotationPower(const RotationSpec& spec, int k);

bool isOrthogonal(const Eigen::MatrixXd& m, double tol = 1e-12);

// True iff every entry is in {-1, 0, +1} within tol, each row and column
// has exactly one nonzero entry, and the diagonal is all zero.
bool isZeroDiagonalPermutation(const Eigen::MatrixXd& m, double tol = 1e-10);

}  // namespace chainbell
