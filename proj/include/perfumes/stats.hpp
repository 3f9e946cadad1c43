#ifndef PERFUMES_STATS_HPP
#define PERFUMES_STATS_HPP

#include <cstddef>
#include <span>
#include <string>

namespace perfumes::stats {

struct CorrelationResult {
    std::string pair_name;
    std::size_t n = 0;
    double r = 0.0;
    double p = 1.0; // two-tailed
};

/// Regularized incomplete beta function I_x(a, b), accurate to ~1e-10.
double incomplete_beta(double a, double b, double x);

/// Student's t CDF with nu degrees of freedom.
double student_t_cdf(double t, double nu);

/// Pearson's r with a two-tailed p-value from the exact t distribution.
/// Throws DegenerateInput for n < 3 or a constant vector.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y,
                          const std::string &pair_name = "");

} // namespace perfumes::stats

#endif
