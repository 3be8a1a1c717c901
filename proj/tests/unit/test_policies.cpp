#include <doctest.h>

#include <cmath>
#include <random>

#include "../oracles.hpp"
#include "offswitch/errors.hpp"
#include "offswitch/policies.hpp"

using namespace offswitch;

TEST_CASE("allow_prob: spot values") {
    CHECK(allow_prob(HumanPolicy::rational(), -0.1) == 0.0);
    CHECK(allow_prob(HumanPolicy::rational(), 0.0) == 1.0);
    CHECK(allow_prob(HumanPolicy::boltzmann(1.0), 0.0) == 0.5);
    const double expected = static_cast<double>(oracle::logistic_long(2.0L));
    CHECK(allow_prob(HumanPolicy::boltzmann(0.5), 1.0) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(allow_prob(HumanPolicy::boltzmann(0.5), 1.0) == doctest::Approx(0.8807970779778824).epsilon(1e-15));
    CHECK(allow_prob(HumanPolicy::constant(0.3), 17.0) == 0.3);
}

TEST_CASE("logistic survives extreme arguments") {
    const HumanPolicy sharp = HumanPolicy::boltzmann(1e-6);
    CHECK(allow_prob(sharp, 1e-2) == 1.0);
    CHECK(allow_prob(sharp, -1e-2) == 0.0);
    CHECK(std::isfinite(allow_prob_grad(sharp, -1e-2)));
    CHECK(allow_prob(HumanPolicy::boltzmann(1.0), -1e4) >= 0.0);
    CHECK(allow_prob(HumanPolicy::boltzmann(1.0), 1e4) == 1.0);
}

TEST_CASE("tabular policy interpolates and extrapolates flat") {
    const HumanPolicy t = HumanPolicy::tabular({-1.0, 0.0, 2.0}, {0.2, 0.6, 1.0});
    CHECK(allow_prob(t, -5.0) == 0.2);
    CHECK(allow_prob(t, -0.5) == doctest::Approx(0.4));
    CHECK(allow_prob(t, 1.0) == doctest::Approx(0.8));
    CHECK(allow_prob(t, 9.0) == 1.0);
    CHECK(allow_prob_grad(t, -0.5) == doctest::Approx(0.4));
    CHECK(allow_prob_grad(t, 1.0) == doctest::Approx(0.2));
    CHECK(allow_prob_grad(t, 3.0) == 0.0);
    CHECK_THROWS_AS(allow_prob_grad(t, 0.0), NotDifferentiableError);
}

TEST_CASE("policy construction enforces invariants") {
    CHECK_THROWS_AS(HumanPolicy::boltzmann(0.0), ArgumentError);
    CHECK_THROWS_AS(HumanPolicy::boltzmann(-1.0), ArgumentError);
    CHECK_THROWS_AS(HumanPolicy::constant(1.5), ArgumentError);
    CHECK_THROWS_AS(HumanPolicy::tabular({0.0, 0.0}, {0.1, 0.2}), ArgumentError);
    CHECK_THROWS_AS(HumanPolicy::tabular({0.0, 1.0}, {0.1, 1.2}), ArgumentError);
    CHECK_THROWS_AS(HumanPolicy::tabular({0.0, 1.0}, {0.1}), ArgumentError);
}

TEST_CASE("allow_prob_grad: spot values and errors") {
    CHECK(allow_prob_grad(HumanPolicy::boltzmann(1.0), 0.0) == 0.25);
    CHECK(allow_prob_grad(HumanPolicy::constant(0.3), -4.0) == 0.0);
    const HumanPolicy b2 = HumanPolicy::boltzmann(2.0);
    const double fd = oracle::central_difference([&](double u) { return allow_prob(b2, u); }, 1.0);
    CHECK(std::abs(allow_prob_grad(b2, 1.0) - fd) < 1e-8);
    CHECK_THROWS_AS(allow_prob_grad(HumanPolicy::rational(), 1.0), NotDifferentiableError);
}

TEST_CASE("policy properties on random inputs") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u_dist(-20.0, 20.0);
    std::uniform_real_distribution<double> log_beta(-3.0, 1.5);
    const HumanPolicy tab = HumanPolicy::tabular({-2.0, -0.5, 1.0, 3.0}, {0.0, 0.7, 0.4, 0.9});
    for (int trial = 0; trial < 2000; ++trial) {
        const double u = u_dist(gen);
        const HumanPolicy b = HumanPolicy::boltzmann(std::pow(10.0, log_beta(gen)));
        for (const HumanPolicy& p : {HumanPolicy::rational(), b, HumanPolicy::constant(0.25), tab}) {
            const double v = allow_prob(p, u);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        const double h = 1e-3;
        CHECK(allow_prob(b, u + h) >= allow_prob(b, u));
    }
}

TEST_CASE("boltzmann is strictly increasing with positive slope where resolvable") {
    const HumanPolicy b = HumanPolicy::boltzmann(0.7);
    for (double u = -8.0; u < 8.0; u += 0.05) {
        CHECK(allow_prob(b, u + 0.05) > allow_prob(b, u));
        CHECK(allow_prob_grad(b, u) > 0.0);
    }
}

TEST_CASE("boltzmann converges pointwise to the rational step") {
    const HumanPolicy sharp = HumanPolicy::boltzmann(1e-6);
    for (double u : {-5.0, -1.0, -0.01, 0.01, 0.3, 7.0}) {
        CHECK(std::abs(allow_prob(sharp, u) - allow_prob(HumanPolicy::rational(), u)) < 1e-12);
    }
}

TEST_CASE("gradient matches central differences at differentiable points") {
    const HumanPolicy tab = HumanPolicy::tabular({-1.0, 0.5, 2.0}, {0.9, 0.3, 0.6});
    for (double beta : {0.3, 1.0, 4.0}) {
        const HumanPolicy b = HumanPolicy::boltzmann(beta);
        for (double u = -3.0; u <= 3.0; u += 0.37) {
            const double fd = oracle::central_difference([&](double x) { return allow_prob(b, x); }, u);
            CHECK(std::abs(allow_prob_grad(b, u) - fd) < 1e-8);
        }
    }
    for (double u : {-2.3, -0.4, 0.1, 1.2, 2.5}) {
        const double fd = oracle::central_difference([&](double x) { return allow_prob(tab, x); }, u);
        CHECK(std::abs(allow_prob_grad(tab, u) - fd) < 1e-8);
    }
}

TEST_CASE("integration breakpoints follow the policy shape") {
    CHECK(integration_breakpoints(HumanPolicy::rational(), 1.0, 10.0) == std::vector<double>{0.0});
    CHECK(integration_breakpoints(HumanPolicy::constant(0.4), 1.0, 10.0).empty());
    CHECK(integration_breakpoints(HumanPolicy::boltzmann(1.0), 1.0, 10.0).empty());
    const auto graded = integration_breakpoints(HumanPolicy::boltzmann(0.01), 1.0, 11.0);
    CHECK(graded.size() > 3);
    for (std::size_t i = 1; i < graded.size(); ++i) CHECK(graded[i] > graded[i - 1]);
}
