#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wbou/carma.hpp"
#include "wbou/error.hpp"

using namespace wbou;

TEST(MatExp, IdentityAtZero) {
    EXPECT_TRUE(mat_exp_at(1.7, 0.0).isApprox(Eigen::Matrix2d::Identity(), 0.0));
}

TEST(MatExp, Semigroup) {
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double s : {0.0, 0.3, 1.0}) {
            for (double t : {0.1, 0.7, 1.5}) {
                const Eigen::Matrix2d lhs = mat_exp_at(lambda, s + t);
                const Eigen::Matrix2d rhs = mat_exp_at(lambda, s) * mat_exp_at(lambda, t);
                EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12 * lhs.cwiseAbs().maxCoeff());
            }
        }
    }
}

TEST(MatExp, MatchesPowerSeries) {
    for (double lambda : {0.5, 1.0, 3.0}) {
        const auto spec = CarmaSpec::make(lambda, 0.0, 0.0);
        for (double t : {0.0, 0.25, 0.5, 1.0}) {
            if (lambda * t > 3.0) continue;
            const Eigen::Matrix2d series = oracle::expm_series(spec.a_matrix, t);
            EXPECT_LE((mat_exp_at(lambda, t) - series).cwiseAbs().maxCoeff(), 1e-12 * series.cwiseAbs().maxCoeff());
        }
    }
}

TEST(CarmaSpec, Layout) {
    const auto s = CarmaSpec::make(1.0, 2.0, 0.0);
    EXPECT_DOUBLE_EQ(s.r0(0), -1.0);
    EXPECT_DOUBLE_EQ(s.r0(1), 1.0);
    EXPECT_EQ(s.b, Eigen::Vector2d(-2.0, 0.0));
    Eigen::Matrix2d a;
    a << 0.0, 1.0, 1.0, 0.0;
    EXPECT_EQ(s.a_matrix, a);
    const auto eig = CarmaSpec::make(1.5, 0, 0).a_matrix.eigenvalues();
    std::vector<double> re{eig(0).real(), eig(1).real()};
    std::sort(re.begin(), re.end());
    EXPECT_NEAR(re[0], -1.5, 1e-14);
    EXPECT_NEAR(re[1], 1.5, 1e-14);
    EXPECT_EQ(CarmaSpec::make(2.0, 0.7, 0.7).r0(1), 0.0);
}

TEST(CarmaFromWbou, InitialValueIsX0) {
    const auto grid = SimulationGrid::make(1.0, 0.01);
    auto s = PathStreams::derive(51, 0);
    const auto p = simulate_wbou(Driver::gamma_subordinator(1.0, 1.0), 1.3, grid, {}, s);
    const auto spec = carma_from_wbou(p);
    EXPECT_NEAR(spec.b.dot(spec.r0), p.g + p.h, 1e-14);
    EXPECT_NEAR(spec.b.dot(spec.r0), p.x[0], 1e-14);
    EXPECT_EQ(spec.lambda, 1.3);
}

TEST(SimulateCarma, ZeroInput) {
    const auto grid = SimulationGrid::make(2.0, 0.1);
    const std::vector<double> dl(grid.steps(), 0.0);
    for (double v : simulate_carma(CarmaSpec::make(1.0, 0.0, 0.0), dl, grid)) EXPECT_EQ(v, 0.0);
}

TEST(SimulateCarma, Errors) {
    const auto grid = SimulationGrid::make(2.0, 0.1);
    const std::vector<double> short_dl(5, 0.0);
    EXPECT_THROW(simulate_carma(CarmaSpec::make(1.0, 0.0, 0.0), short_dl, grid), GridMismatch);
    const auto long_grid = SimulationGrid::make(40.0, 0.1);
    const std::vector<double> dl(long_grid.steps(), 0.0);
    EXPECT_THROW(simulate_carma(CarmaSpec::make(1.0, 0.0, 0.0), dl, long_grid), DomainError);
    EXPECT_NO_THROW(simulate_carma(CarmaSpec::make(1.0, 0.0, 0.0), dl, long_grid, 50.0));
}

TEST(SimulateCarma, PathwiseEqualityWithWbou) {
    for (const auto& d : {Driver::brownian(0.1, 1.0), Driver::compound_poisson(5.0, ExponentialJumps{1.0}),
                          Driver::gamma_subordinator(1.0, 1.0)}) {
        for (double lambda : {0.5, 1.0, 2.0}) {
            const auto grid = SimulationGrid::make(10.0 / lambda, 1e-3);
            auto s = PathStreams::derive(52, 0);
            const auto p = simulate_wbou(d, lambda, grid, {}, s);
            const auto spec = carma_from_wbou(p);
            const auto states = simulate_carma_states(spec, p.dl, grid);
            double worst = 0.0, worst_r2 = 0.0;
            for (std::size_t k = 0; k < grid.points(); ++k) {
                const double x = spec.b.dot(states[k]);
                worst = std::max(worst, std::abs(x - p.x[k]) / (1.0 + std::abs(p.x[k])));
                const double r2 = -0.5 * (p.x_plus[k] - p.x_minus[k]);
                worst_r2 = std::max(worst_r2, std::abs(states[k](1) - r2) / (1.0 + std::abs(r2)));
            }
            EXPECT_LE(worst, 1e-8) << d.describe() << " lambda=" << lambda;
            EXPECT_LE(worst_r2, 1e-8) << d.describe() << " lambda=" << lambda;
        }
    }
}

TEST(SimulateCarma, EnsembleStationarity) {
    const auto grid = SimulationGrid::make(3.0, 0.01);
    const std::size_t paths = 5000;
    std::vector<double> a(paths), b(paths);
    for (std::size_t i = 0; i < paths; ++i) {
        auto s = PathStreams::derive(53, i);
        const auto p = simulate_wbou(Driver::gamma_subordinator(1.0, 1.0), 1.0, grid, {}, s);
        const auto out = simulate_carma(carma_from_wbou(p), p.dl, grid);
        a[i] = out[0];
        b[i] = out[250];
    }
    const auto ma = oracle::sample_mean(a), mb = oracle::sample_mean(b);
    EXPECT_LE(std::abs(ma.value - mb.value), 4.0 * std::hypot(ma.se, mb.se));
    const auto va = oracle::sample_variance(a), vb = oracle::sample_variance(b);
    EXPECT_LE(std::abs(va.value - vb.value), 4.0 * std::hypot(va.se, vb.se));
}
