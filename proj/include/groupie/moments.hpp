#pragma once
#include <cstdint>

#include "groupie/rational.hpp"

namespace groupie {

struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;
};

struct PairMoments {
    MomentSummary b1;
    MomentSummary b2;
    double covariance = 0.0;
};

// Closed-form conditional mean/variance of the single-vertex statistic
// S = 2(n-i)e1 + (n-2i)(e3+i) - 2i*e2 given deg(v) = i:
//   mean = i((n-2)p + (n-2i))
//   var  = [(2(n-i))^2 i(i-1)/2 + (n-2i)^2 i(n-1-i) + (2i)^2 (n-1-i)(n-2-i)/2] p(1-p)
MomentSummary single_vertex_moments(std::int64_t n, std::int64_t i, double p);

// Same moments from first principles: e1 ~ Bin(C(i,2), p),
// e3 ~ Bin(i(n-1-i), p), e2 ~ Bin(C(n-1-i,2), p) independent, and S is a
// fixed linear form in them.  Agrees with single_vertex_moments
// identically; kept separate as the independent check.
MomentSummary exact_single_vertex_moments(std::int64_t n, std::int64_t i, double p);

// Exact-rational variants of the two routes above, for identity tests.
struct RationalMomentSummary {
    Rational mean;
    Rational variance;
};
RationalMomentSummary single_vertex_moments_rational(std::int64_t n, std::int64_t i,
                                                     const Rational& p);
RationalMomentSummary exact_single_vertex_moments_rational(std::int64_t n, std::int64_t i,
                                                           const Rational& p);

// Adjacent-pair moments as printed in the source derivation, evaluated
// term for term.  The printed mean/variance treat all of deg(v1) edges as
// random even though conditioning on (i1,i2,i3) fixes v2's edges, so they
// disagree with the exact decomposition below; both are exposed so the
// discrepancy can be reported.  The printed covariance does match.
PairMoments paper_pair_moments(std::int64_t n, std::int64_t i1, std::int64_t i2, std::int64_t i3,
                               double p);

// Exact conditional moments of (B1, B2) given the pair partition sizes:
// the ten e_jk are independent binomials and B1, B2 fixed linear forms;
// means, variances and the covariance follow from linearity.
PairMoments exact_pair_moments(std::int64_t n, std::int64_t i1, std::int64_t i2, std::int64_t i3,
                               double p);

}  // namespace groupie
