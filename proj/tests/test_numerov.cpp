#include <gtest/gtest.h>

#include <cmath>

#include "scoul/numerov.hpp"

using namespace scoul;

namespace {

Rational q(const char* s) { return parse_rational(s); }

constexpr int kSteps = 150000;

TEST(Grid, Validation) {
    EXPECT_THROW(RadialGrid(0.0, 10.0, 5000), std::invalid_argument);
    EXPECT_THROW(RadialGrid(1.0, 0.5, 5000), std::invalid_argument);
    EXPECT_THROW(RadialGrid(1e-6, 10.0, 999), std::invalid_argument);
    auto g = RadialGrid::coulombic(1.0, 1.0, 2);
    EXPECT_NEAR(g.r_max, 200.0, 1e-9);
}

TEST(Solve, HydrogenGroundState) {
    ScreenedPotentialSpec co{PotentialKind::coulomb, 1, 0, {}};
    auto grid = RadialGrid::coulombic(1, 1, 1, kSteps);
    auto res = solve(co, 1.0, QuantumState(0, 0), grid, 1e-10);
    EXPECT_NEAR(res.energy, -0.5, 1e-9);
    EXPECT_EQ(res.nodes_found, 0);
}

TEST(Solve, HydrogenFirstExcited) {
    ScreenedPotentialSpec co{PotentialKind::coulomb, 1, 0, {}};
    auto grid = RadialGrid::coulombic(1, 1, 2, kSteps);
    auto res = solve(co, 1.0, QuantumState(1, 0), grid, 1e-10);
    EXPECT_NEAR(res.energy, -0.125, 1e-9);
    EXPECT_EQ(res.nodes_found, 1);
}

TEST(Solve, YukawaRegressionAndHulthenCrossCheck) {
    // frozen after cross-validation against the Hulthen closed form
    ScreenedPotentialSpec yk{PotentialKind::yukawa, 1, q("1/10"), {}};
    auto grid = RadialGrid::coulombic(1, 1, 1, kSteps);
    auto res = solve(yk, 1.0, QuantumState(0, 0), grid, 1e-10);
    EXPECT_NEAR(res.energy, -0.4070580306, 1e-8);

    ScreenedPotentialSpec hu{PotentialKind::hulthen, 1, q("1/10"), {}};
    auto hres = solve(hu, 1.0, QuantumState(0, 0), grid, 1e-10);
    EXPECT_NEAR(hres.energy, to_double(hulthen_exact_s_wave(1, q("1/10"), 1, 0)), 1e-8);
}

TEST(Solve, YukawaMonotonicInScreening) {
    ScreenedPotentialSpec yk{PotentialKind::yukawa, 1, 0, {}};
    auto grid = RadialGrid::coulombic(1, 1, 1, kSteps);
    double prev = -1e9;
    for (const char* lam : {"1/100", "1/10", "1/4", "1/2"}) {
        yk.lambda = q(lam);
        auto res = solve(yk, 1.0, QuantumState(0, 0), grid, 1e-9);
        EXPECT_GT(res.energy, prev) << "lambda=" << lam;
        prev = res.energy;
    }
}

TEST(Solve, NoBoundStateInBracket) {
    // strong screening dissolves the excited state
    ScreenedPotentialSpec yk{PotentialKind::yukawa, 1, q("3/4"), {}};
    auto grid = RadialGrid::coulombic(1, 1, 3, kSteps);
    EXPECT_THROW(solve(yk, 1.0, QuantumState(2, 0), grid, 1e-9), NoBoundStateInBracket);
}

TEST(Solve, RejectsBadInputs) {
    ScreenedPotentialSpec custom;
    custom.kind = PotentialKind::custom;
    custom.custom_coeffs = std::vector<Rational>{q("-1")};
    auto grid = RadialGrid::coulombic(1, 1, 1, kSteps);
    EXPECT_THROW(solve(custom, 1.0, QuantumState(0, 0), grid, 1e-9), std::invalid_argument);
    ScreenedPotentialSpec co{PotentialKind::coulomb, 1, 0, {}};
    EXPECT_THROW(solve(co, 1.0, QuantumState(0, 0), grid, 0.0), std::invalid_argument);
}

TEST(Solve, GridConvergence) {
    // Richardson contract: doubling the steps moves E by less than 10*tol
    ScreenedPotentialSpec co{PotentialKind::coulomb, 1, 0, {}};
    auto grid = RadialGrid::coulombic(1, 1, 1, kSteps);
    double tol = 1e-10;
    auto coarse = detail::solve_on_grid(co, 1.0, QuantumState(0, 0), grid, tol);
    auto fine = detail::solve_on_grid(co, 1.0, QuantumState(0, 0),
                                      RadialGrid(grid.r_min, grid.r_max, grid.steps * 2), tol);
    EXPECT_LT(std::fabs(fine.energy - coarse.energy), 10 * tol);
}

TEST(HulthenExact, CoulombLimit) {
    EXPECT_EQ(hulthen_exact_s_wave(1, 0, 1, 0), q("-1/2"));
    EXPECT_EQ(hulthen_exact_s_wave(1, 0, 1, 1), q("-1/8"));
    EXPECT_EQ(hulthen_exact_s_wave(q("3/2"), 0, 2, 0), q("-9/4"));
}

TEST(HulthenExact, KnownValue) {
    // E = -(2mg - p^2 lam)^2 / (8 m p^2), p = n + 1
    EXPECT_EQ(hulthen_exact_s_wave(1, q("1/10"), 1, 0), q("-361/800"));
}

TEST(HulthenExact, DissolutionThreshold) {
    // p = 1: threshold at lambda = 2mg
    EXPECT_EQ(hulthen_exact_s_wave(1, 2, 1, 0), 0);
    EXPECT_THROW(hulthen_exact_s_wave(1, q("21/10"), 1, 0), std::domain_error);
    EXPECT_THROW(hulthen_exact_s_wave(0, 1, 1, 0), std::invalid_argument);
}

TEST(HulthenExact, ThresholdMatchesSolver) {
    // beyond the threshold the shooting solver cannot bracket the state either
    ScreenedPotentialSpec hu{PotentialKind::hulthen, 1, q("21/10"), {}};
    auto grid = RadialGrid::coulombic(1, 1, 1, kSteps);
    EXPECT_THROW(solve(hu, 1.0, QuantumState(0, 0), grid, 1e-9), NoBoundStateInBracket);
}

}  // namespace
