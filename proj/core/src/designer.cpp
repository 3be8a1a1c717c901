#include "offswitch/designer.hpp"

#include <cmath>

#include "offswitch/errors.hpp"
#include "offswitch/parallel.hpp"
#include "offswitch/random.hpp"
#include "offswitch/stats.hpp"

namespace offswitch {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

struct GridStats {
    RunningStats value;
    RunningStats delta;
};

}  // namespace

void validate(const DesignerScenario& s) {
    if (!std::isfinite(s.prior_mean)) throw ArgumentError("prior_mean must be finite");
    if (!positive_finite(s.prior_std)) throw ArgumentError("prior_std must be positive");
    if (!positive_finite(s.true_noise_std)) throw ArgumentError("true_noise_std must be positive");
    if (s.assumed_noise_grid.empty()) throw ArgumentError("assumed_noise_grid must be non-empty");
    for (std::size_t i = 0; i < s.assumed_noise_grid.size(); ++i) {
        if (!positive_finite(s.assumed_noise_grid[i])) {
            throw ArgumentError("assumed_noise_grid values must be positive");
        }
        if (i > 0 && !(s.assumed_noise_grid[i] > s.assumed_noise_grid[i - 1])) {
            throw ArgumentError("assumed_noise_grid must be strictly increasing");
        }
    }
    if (s.n_actions < 1) throw ArgumentError("n_actions must be >= 1");
    if (s.n_trials < 1) throw ArgumentError("n_trials must be >= 1");
}

double posterior_std_for(double prior_std, double assumed_noise_std) {
    return prior_std * assumed_noise_std /
           std::sqrt(prior_std * prior_std + assumed_noise_std * assumed_noise_std);
}

double assumed_noise_for(double prior_std, double posterior_std) {
    if (!(posterior_std > 0.0 && posterior_std < prior_std)) {
        throw ArgumentError("assumed_noise_for: posterior std must lie in (0, prior_std)");
    }
    return prior_std * posterior_std /
           std::sqrt((prior_std - posterior_std) * (prior_std + posterior_std));
}

TrialDraw draw_trial(const DesignerScenario& scenario, std::size_t trial) {
    Rng rng(derive_stream_seed(scenario.seed, trial));
    TrialDraw draw;
    draw.utilities.resize(scenario.n_actions);
    draw.observations.resize(scenario.n_actions);
    for (std::size_t i = 0; i < scenario.n_actions; ++i) {
        draw.utilities[i] = scenario.prior_mean + scenario.prior_std * rng.normal();
        draw.observations[i] = draw.utilities[i] + scenario.true_noise_std * rng.normal();
    }
    draw.human_draw = rng.uniform();
    return draw;
}

TrialOutcome trial_value(double u_true, const Belief& belief, const HumanPolicy& human,
                         double human_draw) {
    const IncentiveReport report = delta(belief, human);
    TrialOutcome outcome;
    outcome.action = report.optimal;
    outcome.delta = report.delta;
    switch (report.optimal) {
        case RobotAction::Act: outcome.value = u_true; break;
        case RobotAction::SwitchOff: outcome.value = 0.0; break;
        case RobotAction::Wait:
            outcome.value = human_draw < allow_prob(human, u_true) ? u_true : 0.0;
            break;
    }
    return outcome;
}

DesignerResult simulate(const DesignerScenario& scenario, unsigned threads) {
    validate(scenario);
    const std::size_t n_grid = scenario.assumed_noise_grid.size();
    const std::size_t blocks = (scenario.n_trials + kDesignerBlock - 1) / kDesignerBlock;
    const Belief prior = Belief::gaussian(scenario.prior_mean, scenario.prior_std);
    std::vector<std::vector<GridStats>> partial(blocks, std::vector<GridStats>(n_grid));

    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::size_t begin = b * kDesignerBlock;
        const std::size_t end = std::min(scenario.n_trials, begin + kDesignerBlock);
        std::vector<GridStats>& out = partial[b];
        for (std::size_t t = begin; t < end; ++t) {
            const TrialDraw draw = draw_trial(scenario, t);
            for (std::size_t g = 0; g < n_grid; ++g) {
                const double noise = scenario.assumed_noise_grid[g];
                // All candidates share the posterior width, so the best mean wins.
                std::size_t best = 0;
                Belief best_belief = posterior_update(prior, draw.observations[0], noise);
                for (std::size_t i = 1; i < scenario.n_actions; ++i) {
                    Belief candidate = posterior_update(prior, draw.observations[i], noise);
                    if (candidate.mean() > best_belief.mean()) {
                        best = i;
                        best_belief = std::move(candidate);
                    }
                }
                const TrialOutcome outcome =
                    trial_value(draw.utilities[best], best_belief, scenario.human, draw.human_draw);
                out[g].value.add(outcome.value);
                out[g].delta.add(outcome.delta);
            }
        }
    });

    DesignerResult result;
    result.rows.resize(n_grid);
    for (std::size_t g = 0; g < n_grid; ++g) {
        GridStats total;
        for (const auto& block : partial) {
            total.value.merge(block[g].value);
            total.delta.merge(block[g].delta);
        }
        DesignerRow& row = result.rows[g];
        row.assumed_noise_std = scenario.assumed_noise_grid[g];
        row.posterior_std = posterior_std_for(scenario.prior_std, row.assumed_noise_std);
        row.v_mean = total.value.mean;
        row.v_stderr = total.value.standard_error();
        row.delta_mean = total.delta.mean;
        row.delta_stderr = total.delta.standard_error();
    }
    return result;
}

}  // namespace offswitch
