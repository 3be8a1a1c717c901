#include "offswitch/policies.hpp"

#include <algorithm>
#include <cmath>

#include "offswitch/errors.hpp"

namespace offswitch {

namespace {

// Below beta / std = 1/2 the logistic's complex poles sit close enough to the
// real line that the Hermite rule loses digits.
constexpr double kSmoothLogisticRatio = 0.5;
constexpr double kGradingFactor = 4.0;

double tabular_value(const TabularPolicy& t, double u) {
    const auto& xs = t.breakpoints;
    const auto& ys = t.values;
    if (u <= xs.front()) return ys.front();
    if (u >= xs.back()) return ys.back();
    const auto upper = std::upper_bound(xs.begin(), xs.end(), u);
    const auto k = static_cast<std::size_t>(upper - xs.begin());
    const double frac = (u - xs[k - 1]) / (xs[k] - xs[k - 1]);
    return ys[k - 1] + frac * (ys[k] - ys[k - 1]);
}

double tabular_slope(const TabularPolicy& t, double u) {
    const auto& xs = t.breakpoints;
    const auto& ys = t.values;
    if (std::binary_search(xs.begin(), xs.end(), u)) {
        throw NotDifferentiableError("tabular policy is not differentiable at a breakpoint");
    }
    if (u < xs.front() || u > xs.back()) return 0.0;
    const auto upper = std::upper_bound(xs.begin(), xs.end(), u);
    const auto k = static_cast<std::size_t>(upper - xs.begin());
    return (ys[k] - ys[k - 1]) / (xs[k] - xs[k - 1]);
}

}  // namespace

HumanPolicy HumanPolicy::rational() { return HumanPolicy(RationalPolicy{}); }

HumanPolicy HumanPolicy::boltzmann(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw ArgumentError("boltzmann policy: beta must be positive and finite");
    }
    return HumanPolicy(BoltzmannPolicy{beta});
}

HumanPolicy HumanPolicy::constant(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("constant policy: p must lie in [0, 1]");
    return HumanPolicy(ConstantPolicy{p});
}

HumanPolicy HumanPolicy::tabular(std::vector<double> breakpoints, std::vector<double> values) {
    if (breakpoints.empty() || breakpoints.size() != values.size()) {
        throw ArgumentError("tabular policy: need matching, non-empty breakpoints and values");
    }
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (!std::isfinite(breakpoints[i])) throw ArgumentError("tabular policy: breakpoints must be finite");
        if (i > 0 && !(breakpoints[i] > breakpoints[i - 1])) {
            throw ArgumentError("tabular policy: breakpoints must be strictly increasing");
        }
        if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
            throw ArgumentError("tabular policy: values must lie in [0, 1]");
        }
    }
    return HumanPolicy(TabularPolicy{std::move(breakpoints), std::move(values)});
}

double logistic(double x) {
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double allow_prob(const HumanPolicy& policy, double u) {
    return std::visit(
        [u](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RationalPolicy>) {
                return u >= 0.0 ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, BoltzmannPolicy>) {
                return logistic(u / p.beta);
            } else if constexpr (std::is_same_v<T, ConstantPolicy>) {
                return p.p;
            } else {
                return tabular_value(p, u);
            }
        },
        policy.variant());
}

double allow_prob_grad(const HumanPolicy& policy, double u) {
    return std::visit(
        [u](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RationalPolicy>) {
                throw NotDifferentiableError("the rational step policy has no pointwise derivative");
            } else if constexpr (std::is_same_v<T, BoltzmannPolicy>) {
                // pi (1 - pi) written with both tails exact.
                const double a = logistic(u / p.beta);
                const double b = logistic(-u / p.beta);
                return a * b / p.beta;
            } else if constexpr (std::is_same_v<T, ConstantPolicy>) {
                return 0.0;
            } else {
                return tabular_slope(p, u);
            }
        },
        policy.variant());
}

std::vector<double> integration_breakpoints(const HumanPolicy& policy, double belief_std,
                                            double reach) {
    return std::visit(
        [&](const auto& p) -> std::vector<double> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, RationalPolicy>) {
                return {0.0};
            } else if constexpr (std::is_same_v<T, BoltzmannPolicy>) {
                if (p.beta >= kSmoothLogisticRatio * belief_std) return {};
                std::vector<double> points{0.0};
                for (double x = p.beta; x < reach; x *= kGradingFactor) {
                    points.push_back(x);
                    points.push_back(-x);
                }
                std::sort(points.begin(), points.end());
                return points;
            } else if constexpr (std::is_same_v<T, ConstantPolicy>) {
                return {};
            } else {
                return p.breakpoints;
            }
        },
        policy.variant());
}

}  // namespace offswitch
