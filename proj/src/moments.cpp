#include "groupie/moments.hpp"

#include <stdexcept>
#include <string>

namespace groupie {

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability must lie in [0,1], got " + std::to_string(p));
}

void check_single(std::int64_t n, std::int64_t i) {
    if (n < 2) throw std::invalid_argument("single-vertex moments require n >= 2");
    if (i < 0 || i > n - 1)
        throw std::invalid_argument("degree i must lie in [0, n-1], got i=" + std::to_string(i) +
                                    " for n=" + std::to_string(n));
}

void check_pair(std::int64_t n, std::int64_t i1, std::int64_t i2, std::int64_t i3) {
    if (n < 2) throw std::invalid_argument("pair moments require n >= 2");
    if (i1 < 0 || i2 < 0 || i3 < 0)
        throw std::invalid_argument("partition sizes must be non-negative");
    if (i1 + i2 + i3 > n - 2)
        throw std::invalid_argument("partition sizes exceed n-2: i1+i2+i3=" +
                                    std::to_string(i1 + i2 + i3) + ", n=" + std::to_string(n));
}

constexpr std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

// Shared linear-form description of (B1, B2): per e_jk group, the number
// of candidate pairs and the coefficient in each statistic.
struct PairGroup {
    std::int64_t trials;
    std::int64_t coeff_b1;
    std::int64_t coeff_b2;
};

struct PairForm {
    PairGroup groups[10];
    std::int64_t const_b1;
    std::int64_t const_b2;
};

PairForm pair_linear_form(std::int64_t n, std::int64_t i1, std::int64_t i2, std::int64_t i3) {
    const std::int64_t i4 = n - 2 - i1 - i2 - i3;
    const std::int64_t d1 = i1 + i2 + 1;
    const std::int64_t d2 = i3 + i2 + 1;
    const std::int64_t t = i1 + i2 + i3 + 1;
    PairForm f{
        {
            // trials, B1 coefficient, B2 coefficient
            {choose2(i1), 2 * (n - d1), -2 * d2},        // e11
            {i1 * i2, 2 * (n - d1), n - 2 * d2},         // e12
            {i1 * i3, n - 2 * d1, n - 2 * d2},           // e13
            {i1 * i4, n - 2 * d1, -2 * d2},              // e14
            {choose2(i2), 2 * (n - d1), 2 * (n - d2)},   // e22
            {i2 * i3, n - 2 * d1, 2 * (n - d2)},         // e23
            {i2 * i4, n - 2 * d1, n - 2 * d2},           // e24
            {choose2(i3), -2 * d1, 2 * (n - d2)},        // e33
            {i3 * i4, -2 * d1, n - 2 * d2},              // e34
            {choose2(i4), -2 * d1, -2 * d2},             // e44
        },
        2 * (n - d1) * i2 + (n - 2 * d1) * t,
        2 * (n - d2) * i2 + (n - 2 * d2) * t,
    };
    return f;
}

// Printed single-vertex formulas with i interpreted as the conditioned
// degree; reused by paper_pair_moments with i -> i1+i2+1.
double printed_mean(std::int64_t n, std::int64_t i, double p) {
    return static_cast<double>(i) * (static_cast<double>(n - 2) * p + static_cast<double>(n - 2 * i));
}

double printed_variance(std::int64_t n, std::int64_t i, double p) {
    const double a = static_cast<double>(4 * (n - i) * (n - i)) * static_cast<double>(i * (i - 1)) / 2.0;
    const double b = static_cast<double>((n - 2 * i) * (n - 2 * i)) * static_cast<double>(i * (n - 1 - i));
    const double c = static_cast<double>(4 * i * i) * static_cast<double>((n - 1 - i) * (n - 2 - i)) / 2.0;
    return (a + b + c) * (p - p * p);
}

}  // namespace

MomentSummary single_vertex_moments(std::int64_t n, std::int64_t i, double p) {
    check_single(n, i);
    check_p(p);
    return {printed_mean(n, i, p), printed_variance(n, i, p)};
}

MomentSummary exact_single_vertex_moments(std::int64_t n, std::int64_t i, double p) {
    check_single(n, i);
    check_p(p);
    const std::int64_t m1 = choose2(i);
    const std::int64_t m3 = i * (n - 1 - i);
    const std::int64_t m2 = choose2(n - 1 - i);
    const std::int64_t a1 = 2 * (n - i);
    const std::int64_t a3 = n - 2 * i;
    const std::int64_t a2 = -2 * i;
    const double q = p * (1.0 - p);
    MomentSummary out;
    out.mean = p * static_cast<double>(a1 * m1 + a3 * m3 + a2 * m2) +
               static_cast<double>((n - 2 * i) * i);
    out.variance = q * static_cast<double>(a1 * a1 * m1 + a3 * a3 * m3 + a2 * a2 * m2);
    return out;
}

RationalMomentSummary single_vertex_moments_rational(std::int64_t n, std::int64_t i,
                                                     const Rational& p) {
    check_single(n, i);
    RationalMomentSummary out;
    out.mean = Rational(i) * (Rational(n - 2) * p + Rational(n - 2 * i));
    Rational bracket = Rational(4 * (n - i) * (n - i)) * Rational(i * (i - 1), 2) +
                       Rational((n - 2 * i) * (n - 2 * i) * i * (n - 1 - i)) +
                       Rational(4 * i * i) * Rational((n - 1 - i) * (n - 2 - i), 2);
    out.variance = bracket * (p - p * p);
    return out;
}

RationalMomentSummary exact_single_vertex_moments_rational(std::int64_t n, std::int64_t i,
                                                           const Rational& p) {
    check_single(n, i);
    const std::int64_t m1 = choose2(i);
    const std::int64_t m3 = i * (n - 1 - i);
    const std::int64_t m2 = choose2(n - 1 - i);
    const std::int64_t a1 = 2 * (n - i);
    const std::int64_t a3 = n - 2 * i;
    const std::int64_t a2 = -2 * i;
    RationalMomentSummary out;
    out.mean = p * Rational(a1 * m1 + a3 * m3 + a2 * m2) + Rational((n - 2 * i) * i);
    out.variance = (p - p * p) * Rational(a1 * a1 * m1 + a3 * a3 * m3 + a2 * a2 * m2);
    return out;
}

PairMoments paper_pair_moments(std::int64_t n, std::int64_t i1, std::int64_t i2, std::int64_t i3,
                               double p) {
    check_pair(n, i1, i2, i3);
    check_p(p);
    const std::int64_t d1 = i1 + i2 + 1;
    const std::int64_t d2 = i3 + i2 + 1;
    const std::int64_t i4 = n - 2 - i1 - i2 - i3;

    PairMoments out;
    // E[B_j] and Var[B_j] as printed: the single-vertex displays with the
    // prefactor n - d_j and i -> d_j respectively.
    out.b1.mean = static_cast<double>(n - d1) *
                  (static_cast<double>(n - 2) * p + static_cast<double>(n - 2 * d1));
    out.b2.mean = static_cast<double>(n - d2) *
                  (static_cast<double>(n - 2) * p + static_cast<double>(n - 2 * d2));
    out.b1.variance = printed_variance(n, d1, p);
    out.b2.variance = printed_variance(n, d2, p);

    // Cov[B1,B2; i1,i2,i3], term for term.
    const double q = p - p * p;
    double cov = 0.0;
    cov += static_cast<double>(-4 * (n - d1) * d2) * static_cast<double>(choose2(i1));
    cov += static_cast<double>(4 * (n - d1) * (n - d2)) * static_cast<double>(choose2(i2));
    cov += static_cast<double>(-4 * (n - d2) * d1) * static_cast<double>(choose2(i3));
    cov += static_cast<double>(4 * d1 * d2) * static_cast<double>(choose2(i4));
    cov += static_cast<double>(2 * (n - d1) * (n - 2 * d2)) * static_cast<double>(i1 * i2);
    cov += static_cast<double>((n - 2 * d1) * (n - 2 * d2)) * static_cast<double>(i1 * i3);
    cov += static_cast<double>(-2 * (n - 2 * d1) * d2) * static_cast<double>(i1 * i4);
    cov += static_cast<double>(2 * (n - d2) * (n - 2 * d1)) * static_cast<double>(i2 * i3);
    cov += static_cast<double>((n - 2 * d1) * (n - 2 * d2)) * static_cast<double>(i2 * i4);
    cov += static_cast<double>(-2 * d1 * (n - 2 * d2)) * static_cast<double>(i3 * i4);
    out.covariance = cov * q;
    return out;
}

PairMoments exact_pair_moments(std::int64_t n, std::int64_t i1, std::int64_t i2, std::int64_t i3,
                               double p) {
    check_pair(n, i1, i2, i3);
    check_p(p);
    const PairForm form = pair_linear_form(n, i1, i2, i3);
    const double q = p * (1.0 - p);

    double mean1 = static_cast<double>(form.const_b1);
    double mean2 = static_cast<double>(form.const_b2);
    double var1 = 0.0, var2 = 0.0, cov = 0.0;
    for (const auto& g : form.groups) {
        mean1 += p * static_cast<double>(g.coeff_b1 * g.trials);
        mean2 += p * static_cast<double>(g.coeff_b2 * g.trials);
        var1 += q * static_cast<double>(g.coeff_b1 * g.coeff_b1 * g.trials);
        var2 += q * static_cast<double>(g.coeff_b2 * g.coeff_b2 * g.trials);
        cov += q * static_cast<double>(g.coeff_b1 * g.coeff_b2 * g.trials);
    }
    return {{mean1, var1}, {mean2, var2}, cov};
}

}  // namespace groupie
