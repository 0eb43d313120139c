#include "chainbell/rotations.hpp"

#include <cmath>
#include <stdexcept>

namespace chainbell {

BlockDecomposition canonicalDecomposition(int d) {
    if (d < 2)
        throw std::invalid_argument("canonicalDecomposition: dimension must be >= 2");
    if (d % 2 == 0) return BlockDecomposition{d, d / 2, 0};
    return BlockDecomposition{d, (d - 3) / 2, 1};
}

Eigen::MatrixXd buildRotation(const RotationSpec& spec) {
    const BlockDecomposition& b = spec.blocks;
    if (b.m < 0 || b.s < 0 || 2 * b.m + 3 * b.s != b.d)
        throw std::invalid_argument("buildRotation: blocks do not tile the dimension");

    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(b.d, b.d);
    const double c = std::cos(spec.theta1);
    const double sn = std::sin(spec.theta1);
    int row = 0;
    for (int k = 0; k < b.m; ++k, row += 2) {
        u(row, row) = c;
        u(row, row + 1) = sn;
        u(row + 1, row) = -sn;
        u(row + 1, row + 1) = c;
    }
    const double ct = std::cos(spec.theta2);
    const double st = std::sin(spec.theta2);
    const double x = (1.0 + 2.0 * ct) / 3.0;
    const double y = (1.0 - ct - std::sqrt(3.0) * st) / 3.0;
    const double z = (1.0 - ct + std::sqrt(3.0) * st) / 3.0;
    for (int k = 0; k < b.s; ++k, row += 3) {
        u(row, row) = x;     u(row, row + 1) = y;     u(row, row + 2) = z;
        u(row + 1, row) = z; u(row + 1, row + 1) = x; u(row + 1, row + 2) = y;
        u(row + 2, row) = y; u(row + 2, row + 1) = z; u(row + 2, row + 2) = x;
    }
    return u;
}

Eigen::MatrixXd rotationPower(const RotationSpec& spec, int k) {
    if (k < 0)
        throw std::invalid_argument("rotationPower: exponent must be >= 0");
    const Eigen::MatrixXd step = buildRotation(spec);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(spec.blocks.d, spec.blocks.d);
    for (int i = 0; i < k; ++i) acc = acc * step;
    return acc;
}

bool isOrthogonal(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const Eigen::MatrixXd gram = m.transpose() * m;
    return (gram - Eigen::MatrixXd::Identity(m.rows(), m.cols()))
               .cwiseAbs()
               .maxCoeff() <= tol;
}

bool isZeroDiagonalPermutation(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    const Eigen::Index d = m.rows();
    for (Eigen::Index i = 0; i < d; ++i) {
        if (std::abs(m(i, i)) > tol) return false;
        int rowNonzero = 0;
        int colNonzero = 0;
        for (Eigen::Index j = 0; j < d; ++j) {
            const double r = std::abs(m(i, j));
            if (r > tol) {
                if (std::abs(r - 1.0) > tol) return false;
                ++rowNonzero;
            }
            if (std::abs(m(j, i)) > tol) ++colNonzero;
        }
        if (rowNonzero != 1 || colNonzero != 1) return false;
    }
    return true;
}

}  // namespace chainbell
