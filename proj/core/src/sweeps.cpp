#include "offswitch/sweeps.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "offswitch/errors.hpp"
#include "offswitch/parallel.hpp"

namespace offswitch {

namespace {

void validate_axis(const std::vector<double>& axis, const char* name) {
    if (axis.empty()) throw ArgumentError(std::string("sweep grid: ") + name + " axis is empty");
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i])) {
            throw ArgumentError(std::string("sweep grid: ") + name + " axis has a non-finite value");
        }
        if (i > 0 && !(axis[i] > axis[i - 1])) {
            throw ArgumentError(std::string("sweep grid: ") + name + " axis must be strictly increasing");
        }
    }
}

SweepRow rational_row(double mu, double sigma) {
    SweepRow row;
    row.mu = mu;
    row.sigma = sigma;
    const IncentiveReport closed = delta_rational_gaussian(mu, sigma);
    row.delta = closed.delta;
    row.optimal = closed.optimal;
    if (!(mu == 0.0 && sigma == 0.0)) {
        const IncentiveReport parts = delta_decomposition(mu, sigma, HumanPolicy::rational());
        row.info_term = parts.info_term;
        row.correction_term = parts.correction_term;
    }
    return row;
}

SweepRow boltzmann_row(double mu, double sigma, double beta, bool cross_check) {
    const HumanPolicy policy = HumanPolicy::boltzmann(beta);
    const IncentiveReport parts = delta_decomposition(mu, sigma, policy);
    if (cross_check) {
        const double direct = delta(Belief::gaussian(mu, sigma), policy).delta;
        if (std::abs(direct - parts.delta) > kCrossCheckTolerance) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "sweep cross-check failed at mu=" << mu << " sigma=" << sigma << " beta=" << beta
                << ": decomposition " << parts.delta << " vs quadrature " << direct;
            throw CrossCheckError(msg.str());
        }
    }
    SweepRow row;
    row.mu = mu;
    row.sigma = sigma;
    row.beta = beta;
    row.delta = parts.delta;
    row.info_term = parts.info_term;
    row.correction_term = parts.correction_term;
    row.optimal = parts.optimal;
    return row;
}

}  // namespace

std::vector<double> linspace(double start, double stop, std::size_t count) {
    if (count == 0) throw ArgumentError("linspace: count must be positive");
    if (count == 1) return {start};
    // Filled from both ends so a symmetric range gives exactly mirrored values.
    std::vector<double> out(count);
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count / 2; ++i) {
        out[i] = start + step * static_cast<double>(i);
        out[count - 1 - i] = stop - step * static_cast<double>(i);
    }
    if (count % 2 == 1) out[count / 2] = 0.5 * (start + stop);
    return out;
}

std::vector<double> logspace(double start_exp, double stop_exp, std::size_t count) {
    std::vector<double> out = linspace(start_exp, stop_exp, count);
    for (double& x : out) x = std::pow(10.0, x);
    return out;
}

void validate(const SweepGrid& grid) {
    validate_axis(grid.mu_axis, "mu");
    validate_axis(grid.sigma_axis, "sigma");
    if (grid.sigma_axis.front() < 0.0) throw ArgumentError("sweep grid: sigma values must be >= 0");
    if (grid.policy_family == PolicyFamily::Boltzmann) {
        if (!grid.beta_axis) throw ArgumentError("sweep grid: Boltzmann family needs a beta axis");
        validate_axis(*grid.beta_axis, "beta");
        if (!(grid.beta_axis->front() > 0.0)) throw ArgumentError("sweep grid: beta values must be > 0");
    } else if (grid.beta_axis) {
        throw ArgumentError("sweep grid: rational family takes no beta axis");
    }
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid, unsigned threads) {
    validate(grid);
    const std::size_t n_mu = grid.mu_axis.size();
    const std::size_t n_sigma = grid.sigma_axis.size();
    const bool boltzmann = grid.policy_family == PolicyFamily::Boltzmann;
    const std::size_t n_beta = boltzmann ? grid.beta_axis->size() : 1;
    std::vector<SweepRow> rows(n_mu * n_sigma * n_beta);

    parallel_for(rows.size(), threads, [&](std::size_t index) {
        const std::size_t k = index % n_beta;
        const std::size_t j = (index / n_beta) % n_sigma;
        const std::size_t i = index / (n_beta * n_sigma);
        const double mu = grid.mu_axis[i];
        const double sigma = grid.sigma_axis[j];
        if (boltzmann) {
            rows[index] = boltzmann_row(mu, sigma, (*grid.beta_axis)[k],
                                        index % kCrossCheckStride == 0);
        } else {
            rows[index] = rational_row(mu, sigma);
        }
    });
    return rows;
}

std::vector<BoundaryPoint> zero_boundary(const std::vector<SweepRow>& rows) {
    if (rows.empty()) throw ArgumentError("zero_boundary: no rows");
    const double mu = rows.front().mu;
    std::map<double, std::map<double, double>> columns;  // sigma -> beta -> delta
    for (const SweepRow& r : rows) {
        if (r.mu != mu) throw ArgumentError("zero_boundary: rows span more than one mu");
        if (!r.beta) throw ArgumentError("zero_boundary: rows need a beta coordinate");
        if (!columns[r.sigma].emplace(*r.beta, r.delta).second) {
            throw ArgumentError("zero_boundary: duplicate grid point");
        }
    }
    const std::map<double, double>& first = columns.begin()->second;
    for (const auto& [sigma, column] : columns) {
        bool same_betas = column.size() == first.size();
        for (auto a = column.begin(), b = first.begin(); same_betas && a != column.end(); ++a, ++b) {
            same_betas = a->first == b->first;
        }
        if (!same_betas) throw ArgumentError("zero_boundary: grid is not rectangular");
    }

    std::vector<BoundaryPoint> boundary;
    for (const auto& [sigma, column] : columns) {
        auto prev = column.end();
        for (auto it = column.begin(); it != column.end(); prev = it, ++it) {
            const auto [beta, d] = *it;
            if (d == 0.0) {
                boundary.push_back({sigma, beta});
                continue;
            }
            if (prev == column.end() || prev->second == 0.0) continue;
            const auto [beta0, d0] = *prev;
            if ((d0 < 0.0) != (d < 0.0)) {
                boundary.push_back({sigma, beta0 + (0.0 - d0) / (d - d0) * (beta - beta0)});
            }
        }
    }
    return boundary;
}

SweepGrid default_rational_grid() {
    return {linspace(-2.0, 2.0, 81), linspace(0.01, 3.0, 80), std::nullopt, PolicyFamily::Rational};
}

SweepGrid default_rational_sigma_curves() {
    return {{0.0, 0.25, 0.5, 1.0, 2.0}, linspace(0.01, 3.0, 80), std::nullopt, PolicyFamily::Rational};
}

SweepGrid default_boltzmann_grid(double mu) {
    return {{mu}, logspace(-1.3, 0.5, 60), logspace(-1.3, 1.0, 60), PolicyFamily::Boltzmann};
}

}  // namespace offswitch
