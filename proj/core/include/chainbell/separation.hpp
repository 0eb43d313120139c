#pragma once

// Kolmogorov-probability layer: event separation pseudo-metric, the
// triangle / CH / polygon inequalities, and the mismatch-probability
// identity for joint outcome distributions.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace chainbell {

inline constexpr double kExactTol = 1e-12;

// Marginals and joint probability of one event pair.
struct EventStats {
    double pA;
    double pB;
    double pAB;
};

bool isValidEventStats(const EventStats& stats, double tol = kExactTol);

// Separation S(A,B) = P(A) + P(B) - 2 P(A,B).
// Throws std::invalid_argument on malformed stats.
double separation(const EventStats& stats);

// Finite probability space over the joint truth-assignments of k tracked
// events: 2^k atoms, bit e of the atom index giving the truth of event e.
// Events are subsets of atoms, represented as 0/1 masks over atom indices.
class ProbabilitySpace {
  public:
    using Selector = std::vector<std::uint8_t>;  // one flag per atom

    ProbabilitySpace(int trackedEvents, std::vector<double> atomWeights);

    // Atom weights from normalized exponential draws (Dirichlet(1,..,1)).
    static ProbabilitySpace random(int trackedEvents, std::uint64_t seed);

    int trackedEvents() const { return trackedEvents_; }
    std::size_t atomCount() const { return weights_.size(); }
    const std::vector<double>& atomWeights() const { return weights_; }

    // Canonical selector of tracked event e (atoms with bit e set).
    Selector tracked(int e) const;
    Selector complement(const Selector& event) const;

    double probability(const Selector& event) const;
    double joint(const Selector& a, const Selector& b) const;
    EventStats stats(const Selector& a, const Selector& b) const;

  private:
    int trackedEvents_;
    std::vector<double> weights_;
};

double separationOf(const ProbabilitySpace& space,
                    const ProbabilitySpace::Selector& a,
                    const ProbabilitySpace::Selector& b);

// Triangle inequality in probability form:
// P(A,B) + P(B,C) <= P(B) + P(A,C). Holds for every valid space.
bool triangleHolds(const ProbabilitySpace& space,
                   const ProbabilitySpace::Selector& a,
                   const ProbabilitySpace::Selector& b,
                   const ProbabilitySpace::Selector& c,
                   double tol = kExactTol);

// Polygon inequality: S(path.front(), path.back()) <= sum of separations
// along consecutive path links.
bool polygonHolds(const ProbabilitySpace& space,
                  std::span<const ProbabilitySpace::Selector> path,
                  double tol = kExactTol);

// CH expression P(A0,B0)+P(A1,B0)+P(A1,B1)-P(A1)-P(B0)-P(A0,B1);
// local hidden variable models give <= 0.
double chEvaluate(double p00, double p10, double p11,
                  double pA1, double pB0, double p01);

// d x d joint outcome distribution P(i, j) for one setting pair.
class OutcomeJointDistribution {
  public:
    explicit OutcomeJointDistribution(Eigen::MatrixXd table);

    int dim() const { return static_cast<int>(table_.rows()); }
    double p(int i, int j) const { return table_(i, j); }
    const Eigen::MatrixXd& table() const { return table_; }

    double rowMarginal(int i) const { return table_.row(i).sum(); }
    double colMarginal(int j) const { return table_.col(j).sum(); }

    // EventStats of the outcome-x pair (Alice gets x, Bob gets x).
    EventStats outcomeStats(int x) const;

  private:
    Eigen::MatrixXd table_;
};

// P(A != B) = 1 - sum_x P(x, x); equals (1/2) sum_x S(A^x, B^x).
double mismatchProbability(const OutcomeJointDistribution& dist);

}  // namespace chainbell
