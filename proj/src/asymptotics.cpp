#include "groupie/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace groupie {

double normal_cdf(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("normal_cdf requires finite x");
    // erfc keeps full relative accuracy in the left tail where
    // 1 - erf(x)/2 would cancel.
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

std::string regime_name(LimitRegime regime) {
    switch (regime) {
        case LimitRegime::gnp: return "gnp";
        case LimitRegime::bipartite_unbalanced: return "bipartite-unbalanced";
        case LimitRegime::bipartite_balanced_shift: return "bipartite-balanced-shift";
    }
    return "unknown";
}

LimitPrediction gnp_limit() {
    LimitPrediction out;
    out.value = normal_cdf(1.0);
    out.regime = LimitRegime::gnp;
    return out;
}

LimitPrediction bipartite_unbalanced_limit(double alpha) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be a finite non-negative real");
    LimitPrediction out;
    out.value = std::max(1.0, alpha) / (1.0 + alpha);
    out.regime = LimitRegime::bipartite_unbalanced;
    out.alpha = alpha;
    return out;
}

LimitPrediction balanced_shift_limit(double p, std::int64_t c) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("balanced-shift limit requires 0 < p < 1");
    const double shift = p * static_cast<double>(c) / (2.0 * (1.0 - p));
    LimitPrediction out;
    out.value = 0.5 * (normal_cdf(1.0 + shift) + normal_cdf(1.0 - shift));
    out.regime = LimitRegime::bipartite_balanced_shift;
    out.p = p;
    out.c = c;
    return out;
}

double isolated_vertex_bound(std::uint64_t n, double p) {
    if (n < 1) throw std::invalid_argument("isolated_vertex_bound requires n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    return static_cast<double>(n) * std::pow(1.0 - p, static_cast<double>(n - 1));
}

double berry_esseen_bound(double p, std::uint64_t edge_trials, double constant) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("berry_esseen_bound requires 0 < p < 1");
    if (edge_trials < 1) throw std::invalid_argument("edge_trials must be >= 1");
    if (!(constant > 0.0)) throw std::invalid_argument("constant must be positive");
    return constant * (p * p + (1.0 - p) * (1.0 - p)) / std::sqrt(p * (1.0 - p)) /
           std::sqrt(static_cast<double>(edge_trials));
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> points, std::vector<double> probs) {
    if (points.size() != probs.size() || points.empty())
        throw std::invalid_argument("distribution needs matching, non-empty support/probability lists");
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });

    double total = 0.0;
    for (std::size_t idx : order) {
        double x = points[idx];
        double w = probs[idx];
        if (!std::isfinite(x)) throw std::invalid_argument("support point must be finite");
        if (!(w >= 0.0)) throw std::invalid_argument("probabilities must be non-negative");
        total += w;
        if (!points_.empty() && points_.back() == x)
            probs_.back() += w;
        else {
            points_.push_back(x);
            probs_.push_back(w);
        }
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("probabilities must sum to 1 (got " + std::to_string(total) +
                                    ")");
}

double sup_cdf_distance(const DiscreteDistribution& f, const DiscreteDistribution& g) {
    // Both CDFs are right-continuous steps; the sup is attained just after
    // a support point of either one.
    double cf = 0.0, cg = 0.0, best = 0.0;
    std::size_t a = 0, b = 0;
    while (a < f.size() || b < g.size()) {
        double x = std::min(a < f.size() ? f.points()[a] : std::numeric_limits<double>::infinity(),
                            b < g.size() ? g.points()[b] : std::numeric_limits<double>::infinity());
        while (a < f.size() && f.points()[a] == x) cf += f.probs()[a++];
        while (b < g.size() && g.points()[b] == x) cg += g.probs()[b++];
        best = std::max(best, std::abs(cf - cg));
    }
    return best;
}

DiscreteDistribution convolve(std::span<const DiscreteDistribution> parts) {
    if (parts.empty()) throw std::invalid_argument("convolve requires at least one distribution");
    std::map<double, double> acc;
    acc[0.0] = 1.0;
    for (const auto& d : parts) {
        std::map<double, double> next;
        for (const auto& [x, w] : acc)
            for (std::size_t k = 0; k < d.size(); ++k) next[x + d.points()[k]] += w * d.probs()[k];
        acc = std::move(next);
    }
    std::vector<double> pts, ws;
    pts.reserve(acc.size());
    ws.reserve(acc.size());
    double total = 0.0;
    for (const auto& [x, w] : acc) {
        pts.push_back(x);
        ws.push_back(w);
        total += w;
    }
    // Compensate accumulated rounding so the constructor's sum check stays
    // meaningful for long products.
    for (double& w : ws) w /= total;
    return {std::move(pts), std::move(ws)};
}

ConvolutionBoundResult convolution_bound_check(std::span<const DiscreteDistribution> fs,
                                               std::span<const DiscreteDistribution> gs) {
    if (fs.size() != gs.size())
        throw std::invalid_argument("convolution_bound_check requires equal-length lists");
    if (fs.empty()) throw std::invalid_argument("convolution_bound_check requires >= 1 component");

    const double cap = 1e6;
    double prod_f = 1.0, prod_g = 1.0;
    for (const auto& d : fs) prod_f *= static_cast<double>(d.size());
    for (const auto& d : gs) prod_g *= static_cast<double>(d.size());
    if (prod_f > cap || prod_g > cap)
        throw resource_error("convolution support product exceeds 1e6");

    ConvolutionBoundResult out;
    out.rhs = 0.0;
    for (std::size_t k = 0; k < fs.size(); ++k) out.rhs += sup_cdf_distance(fs[k], gs[k]);
    out.lhs = sup_cdf_distance(convolve(fs), convolve(gs));
    out.holds = out.lhs <= out.rhs + 1e-12;
    return out;
}

std::optional<LimitPrediction> model_prediction(const ModelParams& params) {
    validate_params(params);
    const double p = edge_probability(params);
    if (!(p > 0.0 && p < 1.0)) return std::nullopt;
    if (std::holds_alternative<GnpParams>(params)) return gnp_limit();

    const auto& b = std::get<BipartiteParams>(params);
    const auto c = static_cast<std::int64_t>(b.n1) - static_cast<std::int64_t>(b.n2);
    const double small = static_cast<double>(std::min(b.n1, b.n2));
    // Fixed-difference parts are the balanced-shift regime; a difference
    // beyond the O(sqrt(n)) fluctuation scale behaves as the ratio limit.
    if (std::abs(static_cast<double>(c)) <= std::sqrt(small))
        return balanced_shift_limit(p, c);
    return bipartite_unbalanced_limit(static_cast<double>(b.n1) / static_cast<double>(b.n2));
}

}  // namespace groupie
