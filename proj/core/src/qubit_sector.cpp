#include "chainbell/qubit_sector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chainbell {

double BlochSetting::z() const { return std::cos(angle); }
double BlochSetting::x() const { return std::sin(angle); }

CorrelationTensor CorrelationTensor::phiPlus() {
    // Basis order (x, y, z).
    Eigen::Matrix3d t = Eigen::Matrix3d::Zero();
    t(0, 0) = 1.0;   // x (x) x
    t(1, 1) = -1.0;  // y (x) y
    t(2, 2) = 1.0;   // z (x) z
    return CorrelationTensor(t);
}

double CorrelationTensor::correlate(const BlochSetting& a,
                                    const BlochSetting& b) const {
    const Eigen::Vector3d va(a.x(), 0.0, a.z());
    const Eigen::Vector3d vb(b.x(), 0.0, b.z());
    return va.dot(t_ * vb);
}

double qubitMismatch(const BlochSetting& a, const BlochSetting& b) {
    return (1.0 - CorrelationTensor::phiPlus().correlate(a, b)) / 2.0;
}

namespace {

void checkScenario(const SectorScenario& scenario) {
    if (scenario.n < 2 || scenario.gamma < 1.0 || scenario.d < 2)
        throw std::invalid_argument(
            "sector scenario: need n >= 2, gamma >= 1, d >= 2");
}

}  // namespace

BlochSetting sectorSetting(const SectorScenario& scenario, int k) {
    checkScenario(scenario);
    if (k < 0 || k > 2 * scenario.n - 1)
        throw std::invalid_argument("sectorSetting: index out of range");
    return BlochSetting{std::numbers::pi * k /
                        (scenario.gamma * 2.0 * scenario.n)};
}

double sectorChainMargin(const SectorScenario& scenario) {
    checkScenario(scenario);
    const double step = std::numbers::pi / (2.0 * scenario.n * scenario.gamma);
    return 2.0 * (scenario.n - 1) * (std::cos(step) - 1.0) + std::cos(step) -
           std::cos((2.0 * scenario.n - 1) * step);
}

double sectorChainMarginLinkSum(const SectorScenario& scenario) {
    checkScenario(scenario);
    double linkSum = 0.0;
    for (int k = 0; k < 2 * scenario.n - 1; ++k) {
        // Chain order (a0,b1), (a2,b1), (a2,b3), ...: every adjacent link
        // joins consecutive ladder indices.
        const int i = (k % 2 == 0) ? k : k + 1;
        const int j = (k % 2 == 0) ? k + 1 : k;
        linkSum += qubitMismatch(sectorSetting(scenario, i),
                                 sectorSetting(scenario, j));
    }
    const double closing = qubitMismatch(sectorSetting(scenario, 0),
                                         sectorSetting(scenario, 2 * scenario.n - 1));
    return 2.0 * (closing - linkSum);
}

std::optional<long> minimalViolatingHalfChain(double gamma, long cap) {
    if (gamma < 1.0)
        throw std::invalid_argument("minimalViolatingHalfChain: gamma must be >= 1");
    for (long n = 2; n <= cap; ++n) {
        if (sectorChainMargin(SectorScenario{static_cast<int>(n), gamma}) > 1e-12)
            return n;
    }
    return std::nullopt;
}

double sectorEmbedScale(double marginQ, int d) {
    if (d < 2)
        throw std::invalid_argument("sectorEmbedScale: dimension must be >= 2");
    return marginQ * 2.0 / d;
}

double sectorAsymptote(double gamma) {
    return std::numbers::pi * std::numbers::pi / (2.0 * gamma * gamma);
}

}  // namespace chainbell
