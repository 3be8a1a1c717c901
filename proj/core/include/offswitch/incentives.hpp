#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "offswitch/beliefs.hpp"
#include "offswitch/policies.hpp"

namespace offswitch {

// a: act directly; w(a): propose and wait for the human; s: switch off.
enum class RobotAction { Wait, Act, SwitchOff };

enum class Method { ClosedFormRational, Decomposition, Quadrature, MonteCarlo };

std::string_view to_string(RobotAction action);
std::string_view to_string(Method method);

/// Expected utility of each robot move. v_off is always exactly 0.
struct ActionValues {
    double v_wait = 0.0;  // E[pi(U) U]
    double v_act = 0.0;   // E[U]
    double v_off = 0.0;
};

/// Incentive to wait, the three action values behind it and, for Gaussian
/// beliefs evaluated through the decomposition, its information and
/// correction terms (delta == info_term - correction_term).
struct IncentiveReport {
    double delta = 0.0;
    RobotAction optimal = RobotAction::Wait;
    ActionValues values;
    std::optional<double> info_term;
    std::optional<double> correction_term;
    Method method = Method::Quadrature;
    std::optional<double> mc_stderr;
};

// argmax of the three values; ties go to Wait, then Act, then SwitchOff.
RobotAction optimal_action(const ActionValues& values);

// E[pi(U)] and E[pi'(U)], with the integration rule chosen from the policy's
// shape (split-domain Legendre around kinks and sharp logistics, Hermite otherwise).
double expected_allow(const Belief& belief, const HumanPolicy& policy);
double expected_slope(const Belief& belief, const HumanPolicy& policy);

ActionValues action_values(const Belief& belief, const HumanPolicy& policy);

/// delta = E[pi(U) U] - max(E[U], 0), by quadrature against the belief.
IncentiveReport delta(const Belief& belief, const HumanPolicy& policy);

/// Closed form for a rational human and a Gaussian belief:
/// delta = min(E[U 1{U>0}], E[-U 1{U<0}]) >= 0.
IncentiveReport delta_rational_gaussian(double mean, double std);

/// log of delta_rational_gaussian(mean, std).delta. Stays finite (for
/// std > 0) where the linear value underflows, i.e. |mean| / std beyond ~38.
double log_delta_rational_gaussian(double mean, double std);

// Probability the human overrides the robot's best guess (1 - E[pi] when mean >= 0).
double correction_probability(double mean, const Belief& belief, const HumanPolicy& policy);

/// Wait is strictly optimal iff (|mean| / std^2) Pr(C) < E[pi'].
/// Evaluated as |mean| Pr(C) < std^2 E[pi'] so a zero std needs no division.
bool wait_condition(double mean, double std, double prob_correction, double expected_slope);

/// delta = std^2 E[pi'] - |mean| Pr(C) for a Gaussian belief. The rational
/// step uses its distributional derivative, E[pi'] = phi(mean/std) / std.
/// Throws DegenerateInputError for the rational step at mean = std = 0.
IncentiveReport delta_decomposition(double mean, double std, const HumanPolicy& policy);

struct IdentitySides {
    double lhs = 0.0;
    double rhs = 0.0;
};

// lhs = E[pi'(U)], rhs = E[pi(U)(1 - pi(U))] / beta for a logistic human.
IdentitySides boltzmann_grad_identity(double mean, double std, double beta);

inline constexpr std::size_t kMonteCarloMinSamples = 1000;
inline constexpr std::size_t kMonteCarloBlock = std::size_t{1} << 16;

/// Sampling estimate of delta. Samples are drawn in fixed blocks of 65536,
/// block b seeded with derive_stream_seed(seed, b), and block statistics are
/// merged in block order, so the result does not depend on `threads`.
/// mc_stderr is the standard error of the estimator actually used for delta
/// (pi U - U when the sampled mean is positive, pi U otherwise).
IncentiveReport delta_monte_carlo(const Belief& belief, const HumanPolicy& policy, std::size_t n,
                                  std::uint64_t seed, unsigned threads = 1);

}  // namespace offswitch
