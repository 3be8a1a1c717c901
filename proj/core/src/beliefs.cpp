#include "offswitch/beliefs.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace offswitch {

namespace detail {

void throw_non_finite(double abscissa) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand is not finite at u = " << abscissa;
    throw NumericalDomainError(msg.str(), abscissa);
}

}  // namespace detail

Belief Belief::gaussian(double mean, double std) {
    if (!std::isfinite(mean) || !std::isfinite(std)) {
        throw ArgumentError("gaussian belief: mean and std must be finite");
    }
    if (std < 0.0) throw ArgumentError("gaussian belief: std must be >= 0");
    return Belief(GaussianBelief{mean, std});
}

Belief Belief::dirac(double value) {
    if (!std::isfinite(value)) throw ArgumentError("dirac belief: value must be finite");
    return Belief(DiracBelief{value});
}

Belief Belief::empirical(std::vector<double> samples) {
    if (samples.empty()) throw ArgumentError("empirical belief: samples must be non-empty");
    for (double s : samples) {
        if (!std::isfinite(s)) throw ArgumentError("empirical belief: samples must be finite");
    }
    return Belief(EmpiricalBelief{std::move(samples)});
}

double Belief::mean() const {
    return std::visit(
        [](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, GaussianBelief>) {
                return b.mean;
            } else if constexpr (std::is_same_v<T, DiracBelief>) {
                return b.value;
            } else {
                return std::accumulate(b.samples.begin(), b.samples.end(), 0.0) /
                       static_cast<double>(b.samples.size());
            }
        },
        variant_);
}

double Belief::std() const {
    return std::visit(
        [this](const auto& b) -> double {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, GaussianBelief>) {
                return b.std;
            } else if constexpr (std::is_same_v<T, DiracBelief>) {
                return 0.0;
            } else {
                const double m = mean();
                double ss = 0.0;
                for (double s : b.samples) ss += (s - m) * (s - m);
                return std::sqrt(ss / static_cast<double>(b.samples.size()));
            }
        },
        variant_);
}

TruncatedMoments truncated_moments(double mean, double std) {
    if (!std::isfinite(mean) || !std::isfinite(std)) {
        throw ArgumentError("truncated_moments: inputs must be finite");
    }
    if (std < 0.0) throw ArgumentError("truncated_moments: std must be >= 0");
    if (std == 0.0) {
        return {std::max(mean, 0.0), std::max(-mean, 0.0), mean > 0.0 ? 1.0 : 0.0};
    }
    const double z = mean / std;
    const double density = std * normal_pdf(z);
    return {mean * normal_cdf(z) + density, density - mean * normal_cdf(-z), normal_cdf(z)};
}

Belief posterior_update(const Belief& prior, double observation, double noise_std) {
    const auto* g = prior.as_gaussian();
    if (g == nullptr) throw ArgumentError("posterior_update: prior must be Gaussian");
    if (!(noise_std > 0.0) || !std::isfinite(noise_std)) {
        throw ArgumentError("posterior_update: noise_std must be positive and finite");
    }
    if (!std::isfinite(observation)) throw ArgumentError("posterior_update: observation must be finite");
    const double prior_var = g->std * g->std;
    const double noise_var = noise_std * noise_std;
    const double total = prior_var + noise_var;
    const double mean = (prior_var * observation + noise_var * g->mean) / total;
    const double std = g->std * noise_std / std::sqrt(total);
    return Belief::gaussian(mean, std);
}

SteinSides stein_check(double mean, double std, const std::function<double(double)>& f,
                       const std::function<double(double)>& f_prime) {
    const Belief belief = Belief::gaussian(mean, std);
    SteinSides sides;
    sides.lhs = expectation(belief, [&](double x) { return x * f(x); });
    sides.rhs = mean * expectation(belief, f) + std * std * expectation(belief, f_prime);
    return sides;
}

}  // namespace offswitch
