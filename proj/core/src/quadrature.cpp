#include "offswitch/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <stdexcept>

#include "offswitch/errors.hpp"

namespace offswitch {

namespace {

constexpr int kMaxNewtonIterations = 100;

bool converged(double z, double previous) {
    return std::abs(z - previous) <= 1e-15 * std::max(1.0, std::abs(z));
}

}  // namespace

QuadratureRule gauss_hermite(std::size_t n) {
    if (n == 0) throw ArgumentError("gauss_hermite: n must be positive");

    // Orthonormal Hermite recurrence for weight exp(-x^2); returns p_n(z) and
    // p_{n-1}(z). The polynomial, not the Hermite function, so no underflow.
    const double pi_m4 = 1.0 / std::pow(std::numbers::pi, 0.25);
    const auto dn = static_cast<double>(n);
    auto evaluate = [&](double z, double& previous) {
        double p1 = pi_m4;
        double p2 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double p3 = p2;
            p2 = p1;
            const auto dj = static_cast<double>(j);
            p1 = z * std::sqrt(2.0 / (dj + 1.0)) * p2 - std::sqrt(dj / (dj + 1.0)) * p3;
        }
        previous = p2;
        return p1;
    };

    // Positive roots lie below sqrt(2n + 1) and are at least ~pi / sqrt(2n + 1)
    // apart, so a scan finer than that brackets each one exactly once.
    const double top = std::sqrt(2.0 * dn + 1.0) + 1.0;
    const double spacing = std::numbers::pi / std::sqrt(2.0 * dn + 1.0);
    const auto steps = static_cast<std::size_t>(std::ceil(top / (spacing / 16.0)));
    const double h = top / static_cast<double>(steps);
    std::vector<double> roots;
    std::vector<double> weights;
    double unused = 0.0;
    double a = (n % 2 == 1) ? h : 0.0;  // skip the root at 0 for odd n
    double fa = evaluate(a, unused);
    for (std::size_t k = 1; k <= steps; ++k) {
        double b = a + h;
        double fb = evaluate(b, unused);
        if ((fa < 0.0) != (fb < 0.0)) {
            double lo = a, hi = b, flo = fa;
            double z = 0.5 * (lo + hi);
            double lower = 0.0;
            for (int it = 0; it < kMaxNewtonIterations; ++it) {
                const double f = evaluate(z, lower);
                const double derivative = std::sqrt(2.0 * dn) * lower;
                if ((f < 0.0) == (flo < 0.0)) {
                    lo = z;
                    flo = f;
                } else {
                    hi = z;
                }
                double next = z - f / derivative;
                if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
                const double previous = z;
                z = next;
                if (converged(z, previous)) break;
            }
            (void)evaluate(z, lower);
            const double derivative = std::sqrt(2.0 * dn) * lower;
            roots.push_back(z);
            weights.push_back(2.0 / (derivative * derivative));
        }
        a = b;
        fa = fb;
    }
    if (roots.size() != n / 2) throw std::logic_error("gauss_hermite: root bracketing failed");

    std::vector<double> x, w;
    for (std::size_t i = roots.size(); i-- > 0;) {
        x.push_back(-roots[i]);
        w.push_back(weights[i]);
    }
    if (n % 2 == 1) {
        double lower = 0.0;
        (void)evaluate(0.0, lower);
        const double derivative = std::sqrt(2.0 * dn) * lower;
        x.push_back(0.0);
        w.push_back(2.0 / (derivative * derivative));
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        x.push_back(roots[i]);
        w.push_back(weights[i]);
    }

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rule.nodes[i] = std::numbers::sqrt2 * x[i];
        rule.weights[i] = w[i] / std::sqrt(std::numbers::pi);
    }
    return rule;
}

QuadratureRule gauss_legendre(std::size_t n) {
    if (n == 0) throw ArgumentError("gauss_legendre: n must be positive");

    const auto dn = static_cast<double>(n);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
        double derivative = 0.0;
        for (int it = 0; it < kMaxNewtonIterations; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                const auto dj = static_cast<double>(j);
                p1 = ((2.0 * dj + 1.0) * z * p2 - dj * p3) / (dj + 1.0);
            }
            derivative = dn * (z * p1 - p2) / (z * z - 1.0);
            const double previous = z;
            z = previous - p1 / derivative;
            if (converged(z, previous)) break;
        }
        const double weight = 2.0 / ((1.0 - z * z) * derivative * derivative);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = weight;
        rule.weights[n - 1 - i] = weight;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

const QuadratureRule& default_hermite_rule() {
    static const QuadratureRule rule = gauss_hermite(kDefaultQuadratureNodes);
    return rule;
}

const QuadratureRule& default_legendre_rule() {
    static const QuadratureRule rule = gauss_legendre(kDefaultQuadratureNodes);
    return rule;
}

}  // namespace offswitch
