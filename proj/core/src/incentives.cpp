#include "offswitch/incentives.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "offswitch/normal.hpp"
#include "offswitch/parallel.hpp"
#include "offswitch/random.hpp"
#include "offswitch/stats.hpp"

namespace offswitch {

namespace {

template <class F>
double policy_expectation(const Belief& belief, const HumanPolicy& policy, F&& f) {
    const auto* g = belief.as_gaussian();
    if (g == nullptr || g->std == 0.0) return expectation(belief, f);
    const double reach = std::abs(g->mean) + kIntegrationHalfWidth * g->std;
    const std::vector<double> breaks = integration_breakpoints(policy, g->std, reach);
    if (breaks.empty()) return expectation(belief, f);
    return expectation_split(belief, f, breaks);
}

IncentiveReport report_from_values(const ActionValues& values, Method method) {
    IncentiveReport report;
    report.values = values;
    report.delta = values.v_wait - std::max(values.v_act, 0.0);
    report.optimal = optimal_action(values);
    report.method = method;
    return report;
}

}  // namespace

std::string_view to_string(RobotAction action) {
    switch (action) {
        case RobotAction::Wait: return "wait";
        case RobotAction::Act: return "act";
        case RobotAction::SwitchOff: return "switch_off";
    }
    return "unknown";
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::ClosedFormRational: return "closed_form_rational";
        case Method::Decomposition: return "decomposition";
        case Method::Quadrature: return "quadrature";
        case Method::MonteCarlo: return "monte_carlo";
    }
    return "unknown";
}

RobotAction optimal_action(const ActionValues& values) {
    if (values.v_wait >= values.v_act && values.v_wait >= values.v_off) return RobotAction::Wait;
    if (values.v_act >= values.v_off) return RobotAction::Act;
    return RobotAction::SwitchOff;
}

double expected_allow(const Belief& belief, const HumanPolicy& policy) {
    if (const auto* g = belief.as_gaussian(); g != nullptr && g->std > 0.0 &&
                                              policy.is<RationalPolicy>()) {
        return normal_cdf(g->mean / g->std);
    }
    if (const auto* c = policy.as<ConstantPolicy>()) return c->p;
    return policy_expectation(belief, policy, [&](double u) { return allow_prob(policy, u); });
}

double expected_slope(const Belief& belief, const HumanPolicy& policy) {
    if (policy.is<RationalPolicy>()) {
        const auto* g = belief.as_gaussian();
        if (g == nullptr) {
            throw NotDifferentiableError("expected slope of the step policy needs a Gaussian belief");
        }
        if (g->std == 0.0) {
            if (g->mean == 0.0) {
                throw DegenerateInputError(
                    "step policy under a point mass at 0: expected slope is unbounded");
            }
            return 0.0;
        }
        return normal_pdf(g->mean / g->std) / g->std;
    }
    if (policy.is<ConstantPolicy>()) return 0.0;
    return policy_expectation(belief, policy, [&](double u) { return allow_prob_grad(policy, u); });
}

ActionValues action_values(const Belief& belief, const HumanPolicy& policy) {
    ActionValues values;
    if (const auto* c = policy.as<ConstantPolicy>()) {
        values.v_wait = c->p * belief.mean();
    } else {
        values.v_wait =
            policy_expectation(belief, policy, [&](double u) { return allow_prob(policy, u) * u; });
    }
    values.v_act = belief.mean();
    values.v_off = 0.0;
    return values;
}

IncentiveReport delta(const Belief& belief, const HumanPolicy& policy) {
    return report_from_values(action_values(belief, policy), Method::Quadrature);
}

IncentiveReport delta_rational_gaussian(double mean, double std) {
    const TruncatedMoments m = truncated_moments(mean, std);
    IncentiveReport report = report_from_values({m.pos_part, mean, 0.0}, Method::ClosedFormRational);
    // min(pos_part, neg_part) = std L(|mean| / std), evaluated without cancellation.
    report.delta = std == 0.0 ? 0.0 : std * normal_loss(std::abs(mean) / std);
    return report;
}

double log_delta_rational_gaussian(double mean, double std) {
    if (!std::isfinite(mean) || !std::isfinite(std) || std < 0.0) {
        throw ArgumentError("log_delta_rational_gaussian: need finite mean and std >= 0");
    }
    if (std == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std) + log_normal_loss(std::abs(mean) / std);
}

double correction_probability(double mean, const Belief& belief, const HumanPolicy& policy) {
    const double allow = expected_allow(belief, policy);
    return mean >= 0.0 ? 1.0 - allow : allow;
}

bool wait_condition(double mean, double std, double prob_correction, double expected_slope) {
    if (std > 0.0) return std::abs(mean) / (std * std) * prob_correction < expected_slope;
    return std::abs(mean) * prob_correction < 0.0;
}

IncentiveReport delta_decomposition(double mean, double std, const HumanPolicy& policy) {
    const Belief belief = Belief::gaussian(mean, std);
    const double slope = expected_slope(belief, policy);
    const double prob_correction = correction_probability(mean, belief, policy);

    IncentiveReport report;
    report.method = Method::Decomposition;
    report.info_term = std == 0.0 ? 0.0 : std * std * slope;
    report.correction_term = std::abs(mean) * prob_correction;
    report.delta = *report.info_term - *report.correction_term;
    report.values.v_act = mean;
    report.values.v_wait = report.delta + std::max(mean, 0.0);
    report.values.v_off = 0.0;
    if (wait_condition(mean, std, prob_correction, slope)) {
        report.optimal = RobotAction::Wait;
    } else {
        report.optimal = mean >= 0.0 ? RobotAction::Act : RobotAction::SwitchOff;
    }
    return report;
}

IdentitySides boltzmann_grad_identity(double mean, double std, double beta) {
    const HumanPolicy policy = HumanPolicy::boltzmann(beta);
    const Belief belief = Belief::gaussian(mean, std);
    IdentitySides sides;
    sides.lhs = expected_slope(belief, policy);
    sides.rhs = policy_expectation(belief, policy, [&](double u) {
                    const double p = allow_prob(policy, u);
                    return p * (1.0 - p);
                }) /
                beta;
    return sides;
}

IncentiveReport delta_monte_carlo(const Belief& belief, const HumanPolicy& policy, std::size_t n,
                                  std::uint64_t seed, unsigned threads) {
    if (n < kMonteCarloMinSamples) {
        throw ArgumentError("delta_monte_carlo: need at least 1000 samples");
    }
    struct BlockStats {
        RunningStats wait;
        RunningStats act;
        RunningStats wait_minus_act;
    };
    const std::size_t blocks = (n + kMonteCarloBlock - 1) / kMonteCarloBlock;
    std::vector<BlockStats> partial(blocks);

    parallel_for(blocks, threads, [&](std::size_t b) {
        Rng rng(derive_stream_seed(seed, b));
        const std::size_t begin = b * kMonteCarloBlock;
        const std::size_t end = std::min(n, begin + kMonteCarloBlock);
        BlockStats& out = partial[b];
        for (std::size_t i = begin; i < end; ++i) {
            const double u = std::visit(
                [&rng](const auto& v) -> double {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, GaussianBelief>) {
                        return v.mean + v.std * rng.normal();
                    } else if constexpr (std::is_same_v<T, DiracBelief>) {
                        return v.value;
                    } else {
                        return v.samples[rng.index(v.samples.size())];
                    }
                },
                belief.variant());
            const double waited = allow_prob(policy, u) * u;
            out.wait.add(waited);
            out.act.add(u);
            out.wait_minus_act.add(waited - u);
        }
    });

    BlockStats total;
    for (const BlockStats& p : partial) {
        total.wait.merge(p.wait);
        total.act.merge(p.act);
        total.wait_minus_act.merge(p.wait_minus_act);
    }
    IncentiveReport report =
        report_from_values({total.wait.mean, total.act.mean, 0.0}, Method::MonteCarlo);
    report.mc_stderr = total.act.mean > 0.0 ? total.wait_minus_act.standard_error()
                                            : total.wait.standard_error();
    return report;
}

}  // namespace offswitch
