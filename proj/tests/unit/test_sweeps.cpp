#include <doctest.h>

#include <cmath>

#include "offswitch/sweeps.hpp"

using namespace offswitch;

TEST_CASE("axis helpers") {
    const auto lin = linspace(-2.0, 2.0, 81);
    REQUIRE(lin.size() == 81);
    CHECK(lin.front() == -2.0);
    CHECK(lin.back() == 2.0);
    CHECK(lin[40] == 0.0);
    for (std::size_t i = 0; i < lin.size(); ++i) CHECK(lin[i] == -lin[lin.size() - 1 - i]);
    const auto lg = logspace(-1.0, 1.0, 3);
    CHECK(lg[0] == doctest::Approx(0.1));
    CHECK(lg[1] == 1.0);
    CHECK(lg[2] == 10.0);
    CHECK(linspace(3.0, 9.0, 1) == std::vector<double>{3.0});
}

TEST_CASE("sweep: single points") {
    const auto rows = run_sweep({{0.0}, {1.0}, std::nullopt, PolicyFamily::Rational});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].delta == doctest::Approx(0.3989422804014327).epsilon(1e-14));
    CHECK(rows[0].optimal == RobotAction::Wait);
    CHECK_FALSE(rows[0].beta.has_value());
    REQUIRE(rows[0].info_term.has_value());
    CHECK(std::abs(*rows[0].info_term - *rows[0].correction_term - rows[0].delta) < 1e-12);

    const auto act = run_sweep({{1.0}, {0.1}, std::vector<double>{10.0}, PolicyFamily::Boltzmann});
    REQUIRE(act.size() == 1);
    CHECK(act[0].delta < 0.0);
    CHECK(act[0].optimal == RobotAction::Act);

    const auto off = run_sweep({{-1.0}, {0.1}, std::vector<double>{10.0}, PolicyFamily::Boltzmann});
    CHECK(off[0].delta < 0.0);
    CHECK(off[0].optimal == RobotAction::SwitchOff);
}

TEST_CASE("sweep: ordering and thread independence") {
    SweepGrid grid{{-1.0, 0.5}, {0.2, 1.0, 2.0}, std::vector<double>{0.1, 1.0}, PolicyFamily::Boltzmann};
    const auto serial = run_sweep(grid, 1);
    const auto parallel = run_sweep(grid, 4);
    REQUIRE(serial.size() == 12);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].mu == grid.mu_axis[i / 6]);
        CHECK(serial[i].sigma == grid.sigma_axis[(i / 2) % 3]);
        CHECK(*serial[i].beta == (*grid.beta_axis)[i % 2]);
        CHECK(serial[i].delta == parallel[i].delta);
        CHECK(serial[i].optimal == parallel[i].optimal);
    }
}

TEST_CASE("sweep: rational grid is non-negative and mirror symmetric") {
    const auto rows = run_sweep(default_rational_grid());
    REQUIRE(rows.size() == 81 * 80);
    for (std::size_t i = 0; i < 81; ++i) {
        for (std::size_t j = 0; j < 80; ++j) {
            const SweepRow& r = rows[i * 80 + j];
            const SweepRow& mirror = rows[(80 - i) * 80 + j];
            CHECK(r.delta >= 0.0);
            CHECK(r.mu == -mirror.mu);
            CHECK(r.delta == mirror.delta);
        }
    }
}

TEST_CASE("sweep: Boltzmann monotonicity on the default grid") {
    for (double mu : {-1.0, 1.0}) {
        const SweepGrid grid = default_boltzmann_grid(mu);
        const auto rows = run_sweep(grid);
        const std::size_t n_sigma = grid.sigma_axis.size();
        const std::size_t n_beta = grid.beta_axis->size();
        // Non-decreasing in sigma at fixed beta, outside the sharp-human corner.
        for (std::size_t k = 0; k < n_beta; ++k) {
            if ((*grid.beta_axis)[k] < 0.5) continue;
            for (std::size_t j = 1; j < n_sigma; ++j) {
                CHECK(rows[j * n_beta + k].delta >= rows[(j - 1) * n_beta + k].delta - 1e-12);
            }
        }
        // Non-increasing in beta at fixed sigma.
        for (std::size_t j = 0; j < n_sigma; ++j) {
            for (std::size_t k = 1; k < n_beta; ++k) {
                CHECK(rows[j * n_beta + k].delta <= rows[j * n_beta + k - 1].delta + 1e-12);
            }
        }
    }
}

TEST_CASE("sweep: delta dips with sigma for a sharp human and a narrow belief") {
    // 30-digit references; the dip is a property of the model, not of the quadrature.
    const SweepGrid grid{{1.0}, {0.2, 0.4, 0.5}, std::vector<double>{0.2107}, PolicyFamily::Boltzmann};
    const auto rows = run_sweep(grid);
    CHECK(rows[0].delta == doctest::Approx(-0.0107723706828068895).epsilon(1e-10));
    CHECK(rows[1].delta == doctest::Approx(-0.0141427976535312313).epsilon(1e-10));
    CHECK(rows[2].delta == doctest::Approx(-0.0119869976459777643).epsilon(1e-10));
    CHECK(rows[1].delta < rows[0].delta);
}

TEST_CASE("sweep: grid validation") {
    CHECK_THROWS_AS(run_sweep({{}, {1.0}, std::nullopt, PolicyFamily::Rational}), ArgumentError);
    CHECK_THROWS_AS(run_sweep({{1.0, 0.0}, {1.0}, std::nullopt, PolicyFamily::Rational}), ArgumentError);
    CHECK_THROWS_AS(run_sweep({{0.0}, {1.0}, std::nullopt, PolicyFamily::Boltzmann}), ArgumentError);
    CHECK_THROWS_AS(run_sweep({{0.0}, {1.0}, std::vector<double>{0.0, 1.0}, PolicyFamily::Boltzmann}),
                    ArgumentError);
    CHECK_THROWS_AS(run_sweep({{0.0}, {-1.0}, std::nullopt, PolicyFamily::Rational}), ArgumentError);
}

TEST_CASE("zero boundary: interpolation and structure") {
    std::vector<SweepRow> column(2);
    column[0] = {1.0, 0.5, 2.0, -1.0, std::nullopt, std::nullopt, RobotAction::Act};
    column[1] = {1.0, 0.5, 1.0, 1.0, std::nullopt, std::nullopt, RobotAction::Wait};
    const auto crossing = zero_boundary(column);
    REQUIRE(crossing.size() == 1);
    CHECK(crossing[0].sigma == 0.5);
    CHECK(crossing[0].beta == doctest::Approx(1.5));

    CHECK(zero_boundary(run_sweep(default_boltzmann_grid(0.0))).empty());

    SweepGrid fig{{1.0}, linspace(0.05, 3.0, 25), logspace(std::log10(0.05), 1.0, 25), PolicyFamily::Boltzmann};
    const auto rows = run_sweep(fig);
    const auto boundary = zero_boundary(rows);
    CHECK_FALSE(boundary.empty());
    // Low sigma with high beta is the negative corner; high sigma with low beta the positive one.
    CHECK(rows[24].delta < 0.0);
    CHECK(rows[24 * 25].delta > 0.0);
}

TEST_CASE("zero boundary rejects malformed input") {
    CHECK_THROWS_AS(zero_boundary({}), ArgumentError);
    auto rows = run_sweep({{0.5}, {0.5, 1.0}, std::vector<double>{0.5, 2.0}, PolicyFamily::Boltzmann});
    rows.pop_back();
    CHECK_THROWS_AS(zero_boundary(rows), ArgumentError);
    const auto rational = run_sweep({{0.5}, {0.5, 1.0}, std::nullopt, PolicyFamily::Rational});
    CHECK_THROWS_AS(zero_boundary(rational), ArgumentError);
    auto two_mu = run_sweep({{0.0, 0.5}, {1.0}, std::vector<double>{1.0}, PolicyFamily::Boltzmann});
    CHECK_THROWS_AS(zero_boundary(two_mu), ArgumentError);
}
