#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "offswitch/errors.hpp"
#include "offswitch/normal.hpp"
#include "offswitch/quadrature.hpp"

namespace offswitch {

struct GaussianBelief {
    double mean = 0.0;
    double std = 1.0;
};

struct DiracBelief {
    double value = 0.0;
};

struct EmpiricalBelief {
    std::vector<double> samples;
};

/// The robot's belief over the utility of its proposed action.
///
/// A Gaussian with std == 0 is a point mass and is treated exactly like a
/// Dirac belief at its mean by every operation in the library.
class Belief {
public:
    using Variant = std::variant<GaussianBelief, DiracBelief, EmpiricalBelief>;

    static Belief gaussian(double mean, double std);
    static Belief dirac(double value);
    static Belief empirical(std::vector<double> samples);

    const Variant& variant() const { return variant_; }
    const GaussianBelief* as_gaussian() const { return std::get_if<GaussianBelief>(&variant_); }

    double mean() const;
    // Zero for Dirac; the population std for Empirical.
    double std() const;

private:
    explicit Belief(Variant v) : variant_(std::move(v)) {}

    Variant variant_;
};

struct TruncatedMoments {
    double pos_part = 0.0;  // E[U 1{U > 0}]
    double neg_part = 0.0;  // E[-U 1{U < 0}]
    double prob_pos = 0.0;  // Pr(U > 0)
};

// Mass beyond this many standard deviations is dropped by the split-domain rule.
inline constexpr double kIntegrationHalfWidth = 10.0;

namespace detail {

[[noreturn]] void throw_non_finite(double abscissa);

template <class F>
double checked_eval(F& f, double u) {
    const double value = f(u);
    if (!std::isfinite(value)) throw_non_finite(u);
    return value;
}

template <class F>
double hermite_gaussian(double mean, double std, F& f) {
    const QuadratureRule& rule = default_hermite_rule();
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        sum += rule.weights[i] * checked_eval(f, mean + std * rule.nodes[i]);
    }
    return sum;
}

template <class F>
double legendre_panel(double a, double b, double mean, double std, F& f) {
    const QuadratureRule& rule = default_legendre_rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double u = mid + half * rule.nodes[i];
        sum += rule.weights[i] * checked_eval(f, u) * normal_pdf((u - mean) / std);
    }
    return sum * half / std;
}

template <class F>
double split_gaussian(double mean, double std, F& f, std::span<const double> breakpoints) {
    const double lo = mean - kIntegrationHalfWidth * std;
    const double hi = mean + kIntegrationHalfWidth * std;
    std::vector<double> edges{lo};
    for (double b : breakpoints) {
        if (b > lo && b < hi) edges.push_back(b);
    }
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        sum += legendre_panel(edges[k], edges[k + 1], mean, std, f);
    }
    return sum;
}

template <class F>
double sample_mean(const std::vector<double>& samples, F& f) {
    double sum = 0.0;
    for (double s : samples) sum += checked_eval(f, s);
    return sum / static_cast<double>(samples.size());
}

}  // namespace detail

/// E[f(U)] under the belief. Gaussian beliefs use the 201-node Gauss-Hermite
/// rule, which assumes f is smooth; see expectation_split for kinks and jumps.
/// Throws NumericalDomainError naming the first node where f is not finite.
template <class F>
double expectation(const Belief& belief, F&& f) {
    return std::visit(
        [&](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, GaussianBelief>) {
                if (b.std == 0.0) return detail::checked_eval(f, b.mean);
                return detail::hermite_gaussian(b.mean, b.std, f);
            } else if constexpr (std::is_same_v<T, DiracBelief>) {
                return detail::checked_eval(f, b.value);
            } else {
                return detail::sample_mean(b.samples, f);
            }
        },
        belief.variant());
}

/// E[f(U)] for an f that is only piecewise smooth. For Gaussian beliefs the
/// range mean +- 10 std is cut at every breakpoint inside it and each panel
/// gets a 201-node Gauss-Legendre rule. Other variants ignore the breakpoints.
template <class F>
double expectation_split(const Belief& belief, F&& f, std::span<const double> breakpoints) {
    if (const auto* g = belief.as_gaussian(); g != nullptr && g->std > 0.0) {
        return detail::split_gaussian(g->mean, g->std, f, breakpoints);
    }
    return expectation(belief, f);
}

TruncatedMoments truncated_moments(double mean, double std);

/// Conjugate normal update of a Gaussian prior after observing
/// observation = U + noise, noise ~ N(0, noise_std^2).
Belief posterior_update(const Belief& prior, double observation, double noise_std);

struct SteinSides {
    double lhs = 0.0;  // E[X f(X)]
    double rhs = 0.0;  // E[X] E[f(X)] + std^2 E[f'(X)]
};

SteinSides stein_check(double mean, double std, const std::function<double(double)>& f,
                       const std::function<double(double)>& f_prime);

}  // namespace offswitch
