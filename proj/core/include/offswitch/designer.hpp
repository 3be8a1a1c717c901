#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "offswitch/beliefs.hpp"
#include "offswitch/incentives.hpp"
#include "offswitch/policies.hpp"

namespace offswitch {

/// A designer's off-switch experiment. Each trial draws n_actions true
/// utilities from the prior and one noisy observation of each; the robot is
/// told the observation noise is `assumed_noise_std` (one run per grid value)
/// and plays the off-switch game for the candidate with the best posterior mean.
struct DesignerScenario {
    double prior_mean = 0.0;
    double prior_std = 1.0;
    double true_noise_std = 1.0;
    std::vector<double> assumed_noise_grid;
    std::size_t n_actions = 1;
    std::size_t n_trials = 1;
    std::uint64_t seed = 0;
    // Both the robot's model of the human and the human who decides in the trial.
    HumanPolicy human = HumanPolicy::rational();
};

struct DesignerRow {
    double assumed_noise_std = 0.0;
    double posterior_std = 0.0;
    double v_mean = 0.0;
    double v_stderr = 0.0;
    double delta_mean = 0.0;
    double delta_stderr = 0.0;
};

struct DesignerResult {
    std::vector<DesignerRow> rows;
};

struct TrialDraw {
    std::vector<double> utilities;
    std::vector<double> observations;
    double human_draw = 0.0;  // uniform [0, 1); the human allows iff draw < allow_prob
};

struct TrialOutcome {
    double value = 0.0;
    RobotAction action = RobotAction::Wait;
    double delta = 0.0;  // robot-side incentive behind `action`
};

inline constexpr std::size_t kDesignerBlock = 2048;

void validate(const DesignerScenario& scenario);

// Width of the robot's posterior after one observation under the assumed noise.
double posterior_std_for(double prior_std, double assumed_noise_std);
// Inverse of posterior_std_for; needs 0 < posterior_std < prior_std.
double assumed_noise_for(double prior_std, double posterior_std);

/// Random draws of trial `trial`, from stream derive_stream_seed(seed, trial):
/// (utility, observation) pairs per candidate, then the human's uniform.
TrialDraw draw_trial(const DesignerScenario& scenario, std::size_t trial);

/// Plays one game: the robot picks its optimal move under `belief`, and the
/// payoff is realized against the true utility.
TrialOutcome trial_value(double u_true, const Belief& belief, const HumanPolicy& human,
                         double human_draw);

/// Runs every trial at every grid point, reusing the same draws across the
/// grid. Trials are reduced in fixed blocks, so output is bit-identical for
/// any thread count.
DesignerResult simulate(const DesignerScenario& scenario, unsigned threads = 1);

}  // namespace offswitch
