#pragma once

#include <cmath>
#include <numbers>

namespace offswitch {

inline double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

// Phi(z) through erfc so the lower tail keeps full relative precision.
inline double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

namespace detail {

// c with 1 - z R(z) = c / (z + c), R the Mills ratio, from the Laplace
// continued fraction R(z) = 1 / (z + 1 / (z + 2 / (z + 3 / ...))).
inline double mills_tail_fraction(double z) {
    double t = 0.0;
    for (int k = 100; k >= 2; --k) t = k / (z + t);
    return 1.0 / (z + t);
}

inline constexpr double kLossSeriesCutover = 3.0;

}  // namespace detail

/// Standard normal loss L(z) = phi(z) - z Phi(-z) = E[max(Z - z, 0)].
/// The direct form cancels badly in the upper tail, so z >= 3 goes through
/// the continued fraction instead.
inline double normal_loss(double z) {
    if (z < detail::kLossSeriesCutover) return normal_pdf(z) - z * normal_cdf(-z);
    const double c = detail::mills_tail_fraction(z);
    return normal_pdf(z) * (c / (z + c));
}

// log L(z), finite long after L(z) itself underflows.
inline double log_normal_loss(double z) {
    if (z < detail::kLossSeriesCutover) return std::log(normal_loss(z));
    const double c = detail::mills_tail_fraction(z);
    return -0.5 * z * z - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(c / (z + c));
}

}  // namespace offswitch
