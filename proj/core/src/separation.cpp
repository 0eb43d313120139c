#include "chainbell/separation.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace chainbell {

bool isValidEventStats(const EventStats& s, double tol) {
    if (!(s.pA >= -tol && s.pA <= 1.0 + tol)) return false;
    if (!(s.pB >= -tol && s.pB <= 1.0 + tol)) return false;
    if (!(s.pAB >= -tol)) return false;
    if (s.pAB > std::min(s.pA, s.pB) + tol) return false;
    if (s.pA + s.pB - s.pAB > 1.0 + tol) return false;
    return true;
}

double separation(const EventStats& s) {
    if (!isValidEventStats(s))
        throw std::invalid_argument("separation: invalid event probabilities");
    return s.pA + s.pB - 2.0 * s.pAB;
}

ProbabilitySpace::ProbabilitySpace(int trackedEvents,
                                   std::vector<double> atomWeights)
    : trackedEvents_(trackedEvents), weights_(std::move(atomWeights)) {
    if (trackedEvents < 1 || trackedEvents > 20)
        throw std::invalid_argument("ProbabilitySpace: tracked event count out of range");
    const std::size_t atoms = std::size_t{1} << trackedEvents;
    if (weights_.size() != atoms)
        throw std::invalid_argument("ProbabilitySpace: expected 2^k atom weights");
    double total = 0.0;
    for (double w : weights_) {
        if (w < 0.0)
            throw std::invalid_argument("ProbabilitySpace: negative atom weight");
        total += w;
    }
    if (std::abs(total - 1.0) > kExactTol)
        throw std::invalid_argument("ProbabilitySpace: atom weights must sum to 1");
}

ProbabilitySpace ProbabilitySpace::random(int trackedEvents, std::uint64_t seed) {
    const std::size_t atoms = std::size_t{1} << trackedEvents;
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> w(atoms);
    double total = 0.0;
    for (double& x : w) {
        x = exp1(rng);
        total += x;
    }
    for (double& x : w) x /= total;
    // Renormalize exactly enough for the sum invariant.
    double sum = 0.0;
    for (double x : w) sum += x;
    w.back() += 1.0 - sum;
    if (w.back() < 0.0) w.back() = 0.0;
    return ProbabilitySpace(trackedEvents, std::move(w));
}

ProbabilitySpace::Selector ProbabilitySpace::tracked(int e) const {
    if (e < 0 || e >= trackedEvents_)
        throw std::invalid_argument("tracked: event index out of range");
    Selector sel(atomCount(), 0);
    for (std::size_t atom = 0; atom < atomCount(); ++atom)
        sel[atom] = static_cast<std::uint8_t>((atom >> e) & 1u);
    return sel;
}

ProbabilitySpace::Selector ProbabilitySpace::complement(const Selector& event) const {
    if (event.size() != atomCount())
        throw std::invalid_argument("complement: selector size mismatch");
    Selector sel(atomCount(), 0);
    for (std::size_t atom = 0; atom < atomCount(); ++atom)
        sel[atom] = static_cast<std::uint8_t>(event[atom] ? 0 : 1);
    return sel;
}

double ProbabilitySpace::probability(const Selector& event) const {
    if (event.size() != atomCount())
        throw std::invalid_argument("probability: selector size mismatch");
    double p = 0.0;
    for (std::size_t atom = 0; atom < atomCount(); ++atom)
        if (event[atom]) p += weights_[atom];
    return p;
}

double ProbabilitySpace::joint(const Selector& a, const Selector& b) const {
    if (a.size() != atomCount() || b.size() != atomCount())
        throw std::invalid_argument("joint: selector size mismatch");
    double p = 0.0;
    for (std::size_t atom = 0; atom < atomCount(); ++atom)
        if (a[atom] && b[atom]) p += weights_[atom];
    return p;
}

EventStats ProbabilitySpace::stats(const Selector& a, const Selector& b) const {
    return EventStats{probability(a), probability(b), joint(a, b)};
}

double separationOf(const ProbabilitySpace& space,
                    const ProbabilitySpace::Selector& a,
                    const ProbabilitySpace::Selector& b) {
    const EventStats s = space.stats(a, b);
    return s.pA + s.pB - 2.0 * s.pAB;
}

bool triangleHolds(const ProbabilitySpace& space,
                   const ProbabilitySpace::Selector& a,
                   const ProbabilitySpace::Selector& b,
                   const ProbabilitySpace::Selector& c,
                   double tol) {
    const double lhs = space.joint(a, b) + space.joint(b, c);
    const double rhs = space.probability(b) + space.joint(a, c);
    return lhs <= rhs + tol;
}

bool polygonHolds(const ProbabilitySpace& space,
                  std::span<const ProbabilitySpace::Selector> path,
                  double tol) {
    if (path.size() < 2)
        throw std::invalid_argument("polygonHolds: path needs at least two events");
    double chained = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        chained += separationOf(space, path[k], path[k + 1]);
    return separationOf(space, path.front(), path.back()) <= chained + tol;
}

double chEvaluate(double p00, double p10, double p11,
                  double pA1, double pB0, double p01) {
    return p00 + p10 + p11 - pA1 - pB0 - p01;
}

OutcomeJointDistribution::OutcomeJointDistribution(Eigen::MatrixXd table)
    : table_(std::move(table)) {
    if (table_.rows() < 2 || table_.rows() != table_.cols())
        throw std::invalid_argument("OutcomeJointDistribution: table must be d x d, d >= 2");
    double total = 0.0;
    for (Eigen::Index i = 0; i < table_.rows(); ++i)
        for (Eigen::Index j = 0; j < table_.cols(); ++j) {
            if (table_(i, j) < -kExactTol)
                throw std::invalid_argument("OutcomeJointDistribution: negative entry");
            total += table_(i, j);
        }
    if (std::abs(total - 1.0) > kExactTol)
        throw std::invalid_argument("OutcomeJointDistribution: entries must sum to 1, got " +
                                    std::to_string(total));
}

EventStats OutcomeJointDistribution::outcomeStats(int x) const {
    if (x < 0 || x >= dim())
        throw std::invalid_argument("outcomeStats: outcome out of range");
    return EventStats{rowMarginal(x), colMarginal(x), table_(x, x)};
}

double mismatchProbability(const OutcomeJointDistribution& dist) {
    return 1.0 - dist.table().diagonal().sum();
}

}  // namespace chainbell
