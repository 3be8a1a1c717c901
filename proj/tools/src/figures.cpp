#include "offswitch/cli/figures.hpp"

#include "offswitch/cli/artifacts.hpp"
#include "offswitch/sweeps.hpp"

namespace offswitch::cli {

DesignerScenario figure_designer_scenario(std::size_t n_actions, std::size_t grid_points) {
    DesignerScenario s;
    s.prior_mean = 0.0;
    s.prior_std = 1.0;
    s.true_noise_std = 1.0;
    for (double posterior : linspace(kFigurePosteriorLow, kFigurePosteriorHigh, grid_points)) {
        s.assumed_noise_grid.push_back(assumed_noise_for(s.prior_std, posterior));
    }
    s.n_actions = n_actions;
    s.n_trials = kFigureTrials;
    s.seed = kFigureSeed;
    s.human = HumanPolicy::boltzmann(kFigureBeta);
    return s;
}

std::string multi_action_csv(const std::vector<std::size_t>& n_actions,
                             const std::vector<DesignerResult>& results) {
    std::string out = "n_actions,assumed_noise_std,posterior_std,v_mean,v_stderr,delta_mean,delta_stderr\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const std::string body = designer_csv(results[i]);
        const std::string prefix = std::to_string(n_actions[i]) + ",";
        // Skip the header line of each block.
        std::size_t pos = body.find('\n') + 1;
        while (pos < body.size()) {
            const std::size_t end = body.find('\n', pos);
            out += prefix;
            out.append(body, pos, end + 1 - pos);
            pos = end + 1;
        }
    }
    return out;
}

std::vector<Artifact> figure_artifacts(unsigned threads) {
    std::vector<Artifact> out;
    out.push_back({"fig2_left.csv", sweep_csv(run_sweep(default_rational_sigma_curves(), threads))});
    out.push_back({"fig2_right.csv", sweep_csv(run_sweep(default_rational_grid(), threads))});
    out.push_back({"fig3_mu-1.csv", sweep_csv(run_sweep(default_boltzmann_grid(-1.0), threads))});
    out.push_back({"fig3_mu0.csv", sweep_csv(run_sweep(default_boltzmann_grid(0.0), threads))});
    out.push_back({"fig3_mu1.csv", sweep_csv(run_sweep(default_boltzmann_grid(1.0), threads))});

    out.push_back({"fig4_left.csv",
                   designer_csv(simulate(figure_designer_scenario(1, kFigureGridPoints), threads))});
    out.push_back({"fig4_middle.csv", designer_csv(simulate(
                                          figure_designer_scenario(1, kFigureDenseGridPoints), threads))});

    std::vector<std::size_t> counts;
    std::vector<DesignerResult> results;
    for (std::size_t n : kFigureActionCounts) {
        counts.push_back(n);
        results.push_back(simulate(figure_designer_scenario(n, kFigureGridPoints), threads));
    }
    out.push_back({"fig4_right.csv", multi_action_csv(counts, results)});
    return out;
}

}  // namespace offswitch::cli
