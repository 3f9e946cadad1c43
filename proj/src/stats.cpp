#include "perfumes/stats.hpp"

#include <cmath>
#include <limits>

#include "perfumes/errors.hpp"

namespace perfumes::stats {

namespace {

// Continued fraction for the incomplete beta function (Lentz's method).
double ibeta_cf(double a, double b, double x) {
    constexpr double kTiny = 1e-300;
    constexpr double kEps = 1e-14;
    constexpr int kMaxIter = 500;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps)
            break;
    }
    return h;
}

} // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * ibeta_cf(a, b, x) / a;
    return 1.0 - front * ibeta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double nu) {
    double x = nu / (nu + t * t);
    double tail = 0.5 * incomplete_beta(nu / 2.0, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

CorrelationResult pearson(std::span<const double> x, std::span<const double> y,
                          const std::string &pair_name) {
    if (x.size() != y.size())
        throw DegenerateInput("vector lengths differ");
    const std::size_t n = x.size();
    if (n < 3)
        throw DegenerateInput("need at least 3 samples, got " + std::to_string(n));

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = x[i] - mx;
        double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DegenerateInput("constant input vector");

    CorrelationResult res;
    res.pair_name = pair_name;
    res.n = n;
    res.r = sxy / std::sqrt(sxx * syy);
    if (res.r > 1.0)
        res.r = 1.0;
    if (res.r < -1.0)
        res.r = -1.0;

    double nu = static_cast<double>(n - 2);
    if (std::fabs(res.r) >= 1.0) {
        res.p = 0.0;
    } else {
        double t = res.r * std::sqrt(nu / (1.0 - res.r * res.r));
        res.p = 2.0 * (1.0 - student_t_cdf(std::fabs(t), nu));
        if (res.p < 0.0)
            res.p = 0.0;
        if (res.p > 1.0)
            res.p = 1.0;
    }
    return res;
}

} // namespace perfumes::stats
