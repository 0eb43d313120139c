#pragma once

// Chained inequality confined to a two-dimensional sector of the qudit:
// Bloch settings in the z-x plane inside an angular window pi/gamma around
// one perfect correlation, with the qudit embedding entering only through
// the 2/d probability scale.

#include <Eigen/Dense>
#include <optional>

namespace chainbell {

// Unit vector in the z-x plane at the given angle from z.
struct BlochSetting {
    double angle = 0.0;

    double z() const;
    double x() const;
};

// Correlation tensor of the phi+ state: z(x)z + x(x)x - y(x)y. For z-x
// plane settings a.T b = cos(angle_a - angle_b).
class CorrelationTensor {
  public:
    static CorrelationTensor phiPlus();

    const Eigen::Matrix3d& tensor() const { return t_; }
    double correlate(const BlochSetting& a, const BlochSetting& b) const;

  private:
    explicit CorrelationTensor(Eigen::Matrix3d t) : t_(std::move(t)) {}
    Eigen::Matrix3d t_;
};

// P(lambda_A != lambda_B) = (1 - a.T b)/2 = (1 - cos(angle_a - angle_b))/2.
double qubitMismatch(const BlochSetting& a, const BlochSetting& b);

struct SectorScenario {
    int n = 2;           // half-chain count; settings at pi*k/(gamma*2n)
    double gamma = 1.0;  // angular window is pi/gamma
    int d = 2;           // ambient qudit dimension (scale 2/d)
};

// Setting at index k of the scenario ladder (even k Alice, odd k Bob).
BlochSetting sectorSetting(const SectorScenario& scenario, int k);

// Closed-form quantum excess over the LHV bound:
// 2(n-1)(cos(pi/(2n gamma)) - 1) + cos(pi/(2n gamma)) - cos(pi(2n-1)/(2n gamma)).
// Positive value means the chained inequality is violated.
double sectorChainMargin(const SectorScenario& scenario);

// Same quantity the long way: twice (closing-link mismatch minus the sum
// of adjacent-link mismatches), from per-link qubitMismatch values.
double sectorChainMarginLinkSum(const SectorScenario& scenario);

// Smallest n >= 2 with sectorChainMargin > 1e-12; nullopt if none up to cap.
std::optional<long> minimalViolatingHalfChain(double gamma,
                                              long cap = 1'000'000);

// Express a qubit-sector probability or margin at the qudit level.
double sectorEmbedScale(double marginQ, int d);

// Large-n limit proxy pi^2 / (2 gamma^2) of the sector margin.
double sectorAsymptote(double gamma);

}  // namespace chainbell
