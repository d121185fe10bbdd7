#pragma once
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groupie/graph.hpp"

namespace groupie {

// Phi(x): standard normal CDF.  Absolute error well under 1e-12 (erfc
// based).  Throws std::invalid_argument for non-finite x.
double normal_cdf(double x);

enum class LimitRegime { gnp, bipartite_unbalanced, bipartite_balanced_shift };
std::string regime_name(LimitRegime regime);

struct LimitPrediction {
    double value = 0.0;
    LimitRegime regime = LimitRegime::gnp;
    double alpha = 0.0;    // bipartite_unbalanced only
    double p = 0.0;        // bipartite_balanced_shift only
    std::int64_t c = 0;    // bipartite_balanced_shift only
};

// Limiting groupie proportion Phi(1) in G(n,p); independent of p.
LimitPrediction gnp_limit();

// Limit max(1, alpha)/(1 + alpha) for bipartite parts with ratio
// n1/n2 -> alpha and |n1 - n2| -> infinity.
LimitPrediction bipartite_unbalanced_limit(double alpha);

// Limit (Phi(1 + pc/(2(1-p))) + Phi(1 - pc/(2(1-p))))/2 for equal-rate
// parts with fixed difference c = n1 - n2.  Requires 0 < p < 1.
LimitPrediction balanced_shift_limit(double p, std::int64_t c);

// Union bound n(1-p)^(n-1) on the probability that B(n,p) contains an
// isolated vertex.
double isolated_vertex_bound(std::uint64_t n, double p);

// Best published universal constant for the 1-d Berry-Esseen inequality.
inline constexpr double kBerryEsseenConstant = 0.5600;

// C (p^2 + (1-p)^2) / sqrt(p(1-p)) / sqrt(edge_trials): the uniform
// CDF-distance bound for a standardized Bin(edge_trials, p).
double berry_esseen_bound(double p, std::uint64_t edge_trials,
                          double constant = kBerryEsseenConstant);

// Finite distribution on the reals.  Construction sorts the support,
// merges duplicate points and checks probabilities (non-negative, total
// within 1e-12 of 1).
class DiscreteDistribution {
public:
    DiscreteDistribution(std::vector<double> points, std::vector<double> probs);

    static DiscreteDistribution point_mass(double x) { return {{x}, {1.0}}; }
    static DiscreteDistribution bernoulli(double p) { return {{0.0, 1.0}, {1.0 - p, p}}; }

    std::size_t size() const { return points_.size(); }
    std::span<const double> points() const { return points_; }
    std::span<const double> probs() const { return probs_; }

private:
    std::vector<double> points_;  // strictly increasing
    std::vector<double> probs_;
};

// sup_x |F(x) - G(x)|, exact over the merged support.
double sup_cdf_distance(const DiscreteDistribution& f, const DiscreteDistribution& g);

// Distribution of the sum of independent variables with the given laws.
DiscreteDistribution convolve(std::span<const DiscreteDistribution> parts);

struct ConvolutionBoundResult {
    double lhs = 0.0;  // sup distance between the two sum distributions
    double rhs = 0.0;  // sum of the per-component sup distances
    bool holds = false;
};

// Checks sup|F - G| <= sum_k sup|F_k - G_k| for sums of independent
// variables.  Throws resource_error when the product of support sizes on
// either side exceeds 1e6.
ConvolutionBoundResult convolution_bound_check(std::span<const DiscreteDistribution> fs,
                                               std::span<const DiscreteDistribution> gs);

// The limit a finite model instance is compared against: gnp -> Phi(1);
// bipartite -> balanced-shift when |n1-n2| <= sqrt(min(n1,n2)), otherwise
// the unbalanced ratio limit.  Empty at degenerate p (0 or 1), where no
// limit statement applies.
std::optional<LimitPrediction> model_prediction(const ModelParams& params);

}  // namespace groupie
