#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "offswitch/incentives.hpp"

namespace offswitch {

enum class PolicyFamily { Rational, Boltzmann };

struct SweepGrid {
    std::vector<double> mu_axis;
    std::vector<double> sigma_axis;
    std::optional<std::vector<double>> beta_axis;  // required for Boltzmann, absent for Rational
    PolicyFamily policy_family = PolicyFamily::Rational;
};

struct SweepRow {
    double mu = 0.0;
    double sigma = 0.0;
    std::optional<double> beta;
    double delta = 0.0;
    std::optional<double> info_term;
    std::optional<double> correction_term;
    RobotAction optimal = RobotAction::Wait;
};

struct BoundaryPoint {
    double sigma = 0.0;
    double beta = 0.0;
};

// Every 16th Boltzmann point is recomputed by direct quadrature.
inline constexpr std::size_t kCrossCheckStride = 16;
inline constexpr double kCrossCheckTolerance = 1e-5;

std::vector<double> linspace(double start, double stop, std::size_t count);
// 10^x for x in linspace(start_exp, stop_exp, count).
std::vector<double> logspace(double start_exp, double stop_exp, std::size_t count);

void validate(const SweepGrid& grid);

/// One row per grid point in (mu, sigma, beta) lexicographic order.
/// Rational rows come from the closed form (plus the decomposition terms
/// where defined); Boltzmann rows from the decomposition, with sampled
/// quadrature cross-checks that throw CrossCheckError on disagreement.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, unsigned threads = 0);

/// Linearly interpolated delta = 0 crossings along beta, one sigma column at
/// a time, for a complete Boltzmann grid at a single mu.
std::vector<BoundaryPoint> zero_boundary(const std::vector<SweepRow>& rows);

SweepGrid default_rational_grid();                 // mu in [-2, 2] x 81, sigma in [0.01, 3] x 80
SweepGrid default_rational_sigma_curves();         // a few fixed means, sigma in [0.01, 3] x 80
SweepGrid default_boltzmann_grid(double mu);       // sigma 10^[-1.3, 0.5] x 60, beta 10^[-1.3, 1] x 60

}  // namespace offswitch
