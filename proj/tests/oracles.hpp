#pragma once

// Independent reference computations for the test suites. Nothing here may
// call into the library's quadrature, sampling, or closed forms.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>

namespace oracle {

struct Estimate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

// Plain Monte Carlo with the standard library's normal sampler.
template <class F>
Estimate monte_carlo_normal(double mean, double std, F&& f, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(mean, std);
    long double sum = 0.0L;
    long double sum_sq = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = f(normal(engine));
        sum += v;
        sum_sq += static_cast<long double>(v) * v;
    }
    const long double m = sum / n;
    const long double var = (sum_sq - n * m * m) / (n - 1);
    return {static_cast<double>(m), static_cast<double>(std::sqrt(var / n))};
}

inline double density(double u, double mean, double std) {
    const double z = (u - mean) / std;
    return std::exp(-0.5 * z * z) / (std * std::sqrt(2.0 * std::numbers::pi));
}

// Composite Simpson of f(u) N(u; mean, std^2) over [lo, hi], n even panels.
template <class F>
double simpson_normal(double mean, double std, F&& f, double lo, double hi, std::size_t n = 200000) {
    const double h = (hi - lo) / static_cast<double>(n);
    long double sum = 0.0L;
    for (std::size_t i = 0; i <= n; ++i) {
        const double u = lo + h * static_cast<double>(i);
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * f(u) * density(u, mean, std);
    }
    return static_cast<double>(sum * h / 3.0);
}

// Simpson over mean +- 12 std, split at `cut` when it falls inside.
template <class F>
double simpson_normal_split(double mean, double std, F&& f, double cut = 0.0) {
    const double lo = mean - 12.0 * std;
    const double hi = mean + 12.0 * std;
    if (cut <= lo || cut >= hi) return simpson_normal(mean, std, f, lo, hi);
    return simpson_normal(mean, std, f, lo, cut) + simpson_normal(mean, std, f, cut, hi);
}

template <class F>
double central_difference(F&& f, double x, double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

struct Posterior {
    double mean = 0.0;
    double std = 0.0;
};

// Bayes rule on a dense grid: prior density times likelihood, normalized.
inline Posterior grid_bayes(double prior_mean, double prior_std, double obs, double noise_std) {
    const double lo = prior_mean - 12.0 * prior_std;
    const double hi = prior_mean + 12.0 * prior_std;
    const std::size_t n = 400000;
    const double h = (hi - lo) / static_cast<double>(n);
    long double z = 0.0L, m1 = 0.0L, m2 = 0.0L;
    for (std::size_t i = 0; i <= n; ++i) {
        const double u = lo + h * static_cast<double>(i);
        const long double w = density(u, prior_mean, prior_std) * density(obs, u, noise_std);
        z += w;
        m1 += w * u;
        m2 += w * u * u;
    }
    const long double mean = m1 / z;
    return {static_cast<double>(mean), static_cast<double>(std::sqrt(m2 / z - mean * mean))};
}

inline long double logistic_long(long double x) { return 1.0L / (1.0L + std::exp(-x)); }

}  // namespace oracle
