#include "offswitch/cli/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "offswitch/cli/artifacts.hpp"
#include "offswitch/cli/config.hpp"
#include "offswitch/cli/figures.hpp"
#include "offswitch/errors.hpp"
#include "offswitch/offswitch.hpp"

namespace offswitch::cli {

namespace {

struct DeltaArgs {
    double mu = 0.0;
    double sigma = 0.0;
    bool rational = false;
    std::optional<double> beta;
    std::optional<double> constant;
    std::optional<std::size_t> mc_samples;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct SweepArgs {
    std::optional<std::string> mu;
    std::optional<std::string> sigma;
    std::optional<std::string> beta;
    std::string policy = "rational";
    std::optional<std::string> out;
    unsigned threads = 0;
};

struct DesignerArgs {
    std::string config;
    std::optional<std::string> out;
    unsigned threads = 0;
};

struct FiguresArgs {
    std::string outdir;
    unsigned threads = 0;
};

nlohmann::json optional_number(const std::optional<double>& x) {
    return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

int cmd_delta(const DeltaArgs& a, std::ostream& out) {
    const Belief belief = Belief::gaussian(a.mu, a.sigma);
    HumanPolicy policy = HumanPolicy::rational();
    if (a.beta) policy = HumanPolicy::boltzmann(*a.beta);
    if (a.constant) policy = HumanPolicy::constant(*a.constant);
    if (a.mc_samples && *a.mc_samples < kMonteCarloMinSamples) {
        throw ArgumentError("--mc-check needs at least " + std::to_string(kMonteCarloMinSamples) +
                            " samples");
    }

    IncentiveReport report = delta_decomposition(a.mu, a.sigma, policy);
    if (a.rational) {
        const IncentiveReport parts = report;
        report = delta_rational_gaussian(a.mu, a.sigma);
        report.info_term = parts.info_term;
        report.correction_term = parts.correction_term;
    }

    nlohmann::ordered_json doc;
    doc["delta"] = report.delta;
    doc["optimal"] = to_string(report.optimal);
    doc["v_wait"] = report.values.v_wait;
    doc["v_act"] = report.values.v_act;
    doc["v_off"] = report.values.v_off;
    doc["info_term"] = optional_number(report.info_term);
    doc["correction_term"] = optional_number(report.correction_term);
    doc["method"] = to_string(report.method);
    doc["mc_stderr"] = nullptr;
    if (a.mc_samples) {
        const IncentiveReport mc = delta_monte_carlo(belief, policy, *a.mc_samples, a.seed, a.threads);
        doc["mc_stderr"] = optional_number(mc.mc_stderr);
        doc["mc_delta"] = mc.delta;
    }
    out << doc.dump() << '\n';
    return kExitOk;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    SweepGrid grid;
    if (a.policy == "rational") {
        if (a.beta) throw ArgumentError("--beta applies to --policy boltzmann only");
        grid = default_rational_grid();
    } else {
        if (!a.mu) throw ArgumentError("--policy boltzmann needs --mu");
        grid = default_boltzmann_grid(0.0);
    }
    if (a.mu) grid.mu_axis = parse_axis(*a.mu);
    if (a.sigma) grid.sigma_axis = parse_axis(*a.sigma);
    if (a.beta) grid.beta_axis = parse_axis(*a.beta);
    validate(grid);
    if (a.out) check_output_path(*a.out);

    const std::string csv = sweep_csv(run_sweep(grid, a.threads));
    if (a.out) {
        write_atomic(*a.out, csv);
    } else {
        out << csv;
    }
    return kExitOk;
}

int cmd_designer(const DesignerArgs& a, std::ostream& out) {
    const DesignerScenario scenario = load_designer_config(a.config);
    validate(scenario);
    if (a.out) check_output_path(*a.out);

    const std::string csv = designer_csv(simulate(scenario, a.threads));
    if (a.out) {
        write_atomic(*a.out, csv);
    } else {
        out << csv;
    }
    return kExitOk;
}

int cmd_figures(const FiguresArgs& a, std::ostream& out) {
    const std::filesystem::path dir(a.outdir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw OutputError("cannot create output directory " + dir.string());
    }
    const std::vector<Artifact> artifacts = figure_artifacts(a.threads);
    for (const Artifact& artifact : artifacts) {
        write_atomic(dir / artifact.file_name, artifact.content);
        out << (dir / artifact.file_name).string() << '\n';
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Incentive of a robot to defer to a human who can switch it off"};
    app.name("offswitch");
    app.require_subcommand(1);

    DeltaArgs delta_args;
    CLI::App* delta = app.add_subcommand("delta", "Incentive to wait for one Gaussian belief");
    delta->add_option("--mu", delta_args.mu, "Belief mean")->required();
    delta->add_option("--sigma", delta_args.sigma, "Belief standard deviation")->required();
    CLI::Option_group* human = delta->add_option_group("human", "Human policy (exactly one)");
    human->add_flag("--rational", delta_args.rational, "Allow exactly when the utility is >= 0");
    human->add_option("--beta", delta_args.beta, "Logistic human with this temperature");
    human->add_option("--constant", delta_args.constant, "Allow with this fixed probability");
    human->require_option(1);
    CLI::Option* mc = delta->add_option("--mc-check", delta_args.mc_samples,
                                        "Also estimate delta from this many samples");
    delta->add_option("--seed", delta_args.seed, "Sampling seed")->needs(mc);
    delta->add_option("--threads", delta_args.threads, "Worker threads (0 = all cores)");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Delta over a (mu, sigma[, beta]) grid as CSV");
    const char* axis_help = "start:stop:count[:lin|log] or a comma list";
    sweep->add_option("--mu", sweep_args.mu, axis_help);
    sweep->add_option("--sigma", sweep_args.sigma, axis_help);
    sweep->add_option("--beta", sweep_args.beta, axis_help);
    sweep->add_option("--policy", sweep_args.policy, "Human policy family")
        ->check(CLI::IsMember({"rational", "boltzmann"}));
    sweep->add_option("--out", sweep_args.out, "Output CSV (default: stdout)");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads (0 = all cores)");

    DesignerArgs designer_args;
    CLI::App* designer = app.add_subcommand("designer", "Run a designer experiment from a JSON config");
    designer->add_option("config", designer_args.config, "Scenario JSON")->required();
    designer->add_option("--out", designer_args.out, "Output CSV (default: stdout)");
    designer->add_option("--threads", designer_args.threads, "Worker threads (0 = all cores)");

    FiguresArgs figures_args;
    CLI::App* figures = app.add_subcommand("figures", "Write every figure CSV into a directory");
    figures->add_option("--outdir", figures_args.outdir, "Output directory")->required();
    figures->add_option("--threads", figures_args.threads, "Worker threads (0 = all cores)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        err << active->help();
        return kExitUsage;
    }

    try {
        if (delta->parsed()) return cmd_delta(delta_args, out);
        if (sweep->parsed()) return cmd_sweep(sweep_args, out);
        if (designer->parsed()) return cmd_designer(designer_args, out);
        return cmd_figures(figures_args, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OutputError& e) {
        err << "output error: " << e.what() << '\n';
        return kExitOutput;
    } catch (const std::domain_error& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const CrossCheckError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace offswitch::cli
