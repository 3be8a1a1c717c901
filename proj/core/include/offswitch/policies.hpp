#pragma once

#include <span>
#include <variant>
#include <vector>

namespace offswitch {

// Allows exactly when u >= 0.
struct RationalPolicy {};

// Logistic in u / beta; beta -> 0 recovers the rational step, beta -> inf a coin flip.
struct BoltzmannPolicy {
    double beta = 1.0;
};

// Ignores u entirely: the human behaves like a chance node.
struct ConstantPolicy {
    double p = 0.5;
};

// Piecewise-linear in u between breakpoints, flat outside them.
struct TabularPolicy {
    std::vector<double> breakpoints;
    std::vector<double> values;
};

/// The human's probability of letting the proposed action execute, as a
/// function of its utility to the human.
class HumanPolicy {
public:
    using Variant = std::variant<RationalPolicy, BoltzmannPolicy, ConstantPolicy, TabularPolicy>;

    static HumanPolicy rational();
    static HumanPolicy boltzmann(double beta);
    static HumanPolicy constant(double p);
    static HumanPolicy tabular(std::vector<double> breakpoints, std::vector<double> values);

    const Variant& variant() const { return variant_; }

    template <class T>
    bool is() const {
        return std::holds_alternative<T>(variant_);
    }
    template <class T>
    const T* as() const {
        return std::get_if<T>(&variant_);
    }

private:
    explicit HumanPolicy(Variant v) : variant_(std::move(v)) {}

    Variant variant_;
};

// Overflow-safe logistic 1 / (1 + exp(-x)).
double logistic(double x);

double allow_prob(const HumanPolicy& policy, double u);

/// d/du allow_prob. Throws NotDifferentiableError for the rational step and
/// for a tabular policy evaluated exactly at a breakpoint.
double allow_prob_grad(const HumanPolicy& policy, double u);

/// Points where the policy is not smooth enough for Gauss-Hermite at the
/// given belief width: the step at 0, tabular breakpoints, and for a
/// logistic much sharper than `belief_std` a mesh graded geometrically
/// away from 0 out to `reach`. Empty when the policy is smooth at that scale.
std::vector<double> integration_breakpoints(const HumanPolicy& policy, double belief_std,
                                            double reach);

}  // namespace offswitch
