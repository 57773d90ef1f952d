#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wbou/error.hpp"
#include "wbou/svmodel.hpp"

using namespace wbou;

namespace {

double max_gap(const SvPath& p, double lambda) {
    const auto explicit_iv = integrated_vol_explicit(p, lambda);
    double worst = 0.0;
    for (std::size_t k = 0; k < explicit_iv.size(); ++k) worst = std::max(worst, std::abs(explicit_iv[k] - p.int_x[k]));
    return worst;
}

SvPath sv_path_from(const WbouPath& w) {
    SvPath p{.grid = w.grid};
    p.x = w.x;
    p.x_minus = w.x_minus;
    p.x_plus = w.x_plus;
    p.l_scaled = w.l_cum;
    p.int_x.assign(w.x.size(), 0.0);
    for (std::size_t k = 0; k + 1 < w.x.size(); ++k) p.int_x[k + 1] = p.int_x[k] + 0.5 * (w.x[k] + w.x[k + 1]) * w.grid.dt();
    return p;
}

}  // namespace

TEST(SvSpec, Validation) {
    SvSpec ok;
    EXPECT_NO_THROW(ok.validate());
    SvSpec bad_lambda;
    bad_lambda.lambda = 0.0;
    EXPECT_THROW(bad_lambda.validate(), InvalidLambda);
    SvSpec bm;
    bm.driver = Driver::brownian(0.0, 1.0);
    EXPECT_THROW(bm.validate(), NotASubordinator);
    SvSpec neg;
    neg.driver = Driver::compound_poisson(1.0, PointMassJumps{-1.0});
    EXPECT_THROW(neg.validate(), NotASubordinator);
}

TEST(SimulateSv, ZeroVolatilityKeepsPriceAtStart) {
    SvSpec spec;
    spec.driver = Driver::compound_poisson(0.0, ExponentialJumps{1.0});
    auto s = SvStreams::derive(71, 0);
    const auto p = simulate_sv(spec, SimulationGrid::make(2.0, 0.01), s);
    for (double v : p.y) EXPECT_EQ(v, 0.0);
    for (double v : p.x) EXPECT_EQ(v, 0.0);
}

TEST(SimulateSv, PositivityAndMonotoneIntegral) {
    SvSpec spec;
    spec.lambda = 2.0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto s = SvStreams::derive(72, i);
        const auto p = simulate_sv(spec, SimulationGrid::make(5.0, 0.01), s);
        EXPECT_EQ(p.int_x[0], 0.0);
        for (std::size_t k = 0; k < p.x.size(); ++k) {
            ASSERT_GE(p.x[k], 0.0);
            if (k > 0) {
                ASSERT_GE(p.int_x[k], p.int_x[k - 1]);
            }
        }
    }
}

TEST(SimulateSv, DriftAndWhiteNoiseAreIndependentStreams) {
    SvSpec spec;
    auto a = SvStreams::derive(73, 0), b = SvStreams::derive(73, 0);
    const auto grid = SimulationGrid::make(1.0, 0.01);
    const auto p = simulate_sv(spec, grid, a);
    EXPECT_EQ(p.y, simulate_sv(spec, grid, b).y);
    spec.beta = 1.0;
    auto c = SvStreams::derive(73, 0);
    const auto q = simulate_sv(spec, grid, c);
    EXPECT_EQ(p.x, q.x);
    // Only the drift term differs: y_q - y_p = sum beta x_k dt.
    double drift = 0.0;
    for (std::size_t k = 0; k + 1 < p.x.size(); ++k) {
        drift += p.x[k] * 0.01;
        EXPECT_NEAR(q.y[k + 1] - p.y[k + 1], drift, 1e-12);
    }
}

TEST(SimulateSv, MeanVolatilityIndependentOfLambda) {
    const auto d = Driver::gamma_subordinator(1.0, 1.0);
    for (double lambda : {0.5, 2.0}) {
        SvSpec spec{0.0, 0.0, lambda, d};
        std::vector<double> x(5000);
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto s = SvStreams::derive(74, i);
            x[i] = simulate_sv(spec, SimulationGrid::make(0.5, 0.01), s).x[25];
        }
        EXPECT_TRUE(oracle::sample_mean(x).within(2.0 * moments(d).mu)) << "lambda=" << lambda;
    }
}

TEST(IntegratedVol, ExplicitFormula) {
    SvSpec spec;
    auto s = SvStreams::derive(75, 0);
    const auto p = simulate_sv(spec, SimulationGrid::make(3.0, 0.001), s);
    const auto iv = integrated_vol_explicit(p, spec.lambda);
    EXPECT_NEAR(iv[0], 0.0, 1e-14);
    EXPECT_LT(max_gap(p, spec.lambda), 0.05);
}

TEST(IntegratedVol, DriftDriver) {
    const double gamma = 1.5, lambda = 0.7;
    SvSpec spec{0.0, 0.0, lambda, Driver::deterministic_drift(gamma)};
    auto s = SvStreams::derive(76, 0);
    const auto grid = SimulationGrid::make(2.0, 0.01);
    const auto p = simulate_sv(spec, grid, s);
    const auto iv = integrated_vol_explicit(p, lambda);
    // X is the constant 2 gamma up to O(dt^2); 2 L_{lambda t} / lambda = 2 gamma t.
    for (std::size_t k = 0; k < grid.points(); ++k) {
        EXPECT_NEAR(iv[k], 2.0 * gamma * grid.time(k), 1e-10);
        EXPECT_NEAR(p.int_x[k], 2.0 * gamma * grid.time(k), 1e-3 * grid.time(k));
    }
}

TEST(IntegratedVol, GapIsSecondOrder) {
    // Same scaled-clock driver path seen on dt and 2 dt. With increments placed
    // on grid points the explicit formula integrates the kinked path exactly,
    // leaving only the trapezoid error, which is O(dt^2).
    const auto d = Driver::gamma_subordinator(1.0, 1.0);
    for (double lambda : {0.5, 2.0}) {
        double fine = 0.0, coarse = 0.0;
        for (std::uint64_t i = 0; i < 20; ++i) {
            const double dt = 1e-3;
            const auto grid = SimulationGrid::make(4.0, dt);
            auto s = PathStreams::derive(77, i);
            const std::size_t m = 2 * TruncationPolicy{}.steps(lambda, 2 * dt);
            const auto inc = draw_increments(d, lambda * dt, m, grid.steps(), m, s);
            fine += max_gap(sv_path_from(wbou_from_increments(lambda, grid, inc)), lambda);
            coarse += max_gap(
                sv_path_from(wbou_from_increments(lambda, SimulationGrid::make(4.0, 2 * dt), coarsen(inc, 2))),
                lambda);
        }
        EXPECT_GT(fine / coarse, 0.2) << lambda;
        EXPECT_LT(fine / coarse, 0.3) << lambda;
    }
}

TEST(IntegratedVol, MissingComponents) {
    SvPath p{.grid = SimulationGrid::make(1.0, 0.5)};
    p.x = {1.0, 1.0, 1.0};
    EXPECT_THROW(integrated_vol_explicit(p, 1.0), MissingComponents);
}

TEST(RFunctions, Values) {
    EXPECT_EQ(r_fn(1.3, 0.0), 1.0);
    EXPECT_EQ(rbar_fn(1.3, 0.0), 0.0);
    EXPECT_THROW(r_fn(0.0, 1.0), InvalidLambda);
    EXPECT_THROW(rbar_fn(1.0, -1.0), DomainError);
}

TEST(RFunctions, RbarMatchesNestedQuadrature) {
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double t : {0.5, 1.0, 5.0}) {
            const double nested = oracle::rbar_nested(lambda, t);
            EXPECT_NEAR(rbar_fn(lambda, t), nested, 1e-10 * nested) << lambda << " " << t;
        }
    }
}

TEST(RFunctions, RbarSeriesBranchContinuous) {
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double t : {1e-6, 1e-4, 4.9e-4 / lambda, 5.1e-4 / lambda}) {
            const double nested = oracle::rbar_nested(lambda, t);
            EXPECT_NEAR(rbar_fn(lambda, t), nested, 1e-10 * nested) << lambda << " " << t;
        }
    }
}

TEST(BigR, SecondDifferenceMatchesClosedForm) {
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double delta : {0.5, 1.0}) {
            for (int s = 1; s <= 10; ++s) {
                const auto r = big_r(lambda, delta, s);
                EXPECT_TRUE(r.consistent);
                EXPECT_NEAR(r.second_difference, r.closed_form, 1e-10 * std::abs(r.closed_form));
            }
        }
    }
}

TEST(BigR, MatchesDoubleIntegralOfR) {
    // R(Ds) = int_0^D int_0^D r(|Ds + v - u|) du dv
    const double lambda = 1.2, delta = 0.8;
    for (int s = 1; s <= 3; ++s) {
        auto inner = [&](double v) {
            return oracle::integrate(
                [&](double u) { return r_fn(lambda, std::abs(delta * s + v - u)); }, 0.0, delta);
        };
        EXPECT_NEAR(big_r(lambda, delta, s).closed_form, oracle::integrate(inner, 0.0, delta), 1e-12);
    }
}

TEST(BigR, Errors) {
    EXPECT_THROW(big_r(1.0, 0.0, 1), DomainError);
    EXPECT_THROW(big_r(1.0, 1.0, 0), DomainError);
    EXPECT_THROW(big_r(-1.0, 1.0, 1), InvalidLambda);
}

TEST(CovIntegratedVol, LinearInVAndDecays) {
    EXPECT_DOUBLE_EQ(cov_integrated_vol(3.0, 1.0, 1.0, 2), 3.0 * cov_integrated_vol(1.0, 1.0, 1.0, 2));
    EXPECT_LT(std::abs(cov_integrated_vol(1.0, 1.0, 1.0, 60)), 1e-20);
    EXPECT_THROW(cov_integrated_vol(-1.0, 1.0, 1.0, 1), DomainError);
}

TEST(CovIntegratedVol, MonteCarlo) {
    // lambda = 1, Delta = 1, s = 1, gamma driver: Cov(int_0^1 X, int_1^2 X) = V R(1).
    const auto d = Driver::gamma_subordinator(1.0, 1.0);
    SvSpec spec{0.0, 0.0, 1.0, d};
    const std::size_t paths = 10000;
    std::vector<double> a(paths), b(paths);
    const auto grid = SimulationGrid::make(2.0, 0.01);
    for (std::size_t i = 0; i < paths; ++i) {
        auto s = SvStreams::derive(78, i);
        const auto p = simulate_sv(spec, grid, s);
        a[i] = p.int_x[100];
        b[i] = p.int_x[200] - p.int_x[100];
    }
    const auto ma = oracle::sample_mean(a).value, mb = oracle::sample_mean(b).value;
    std::vector<double> prod(paths);
    for (std::size_t i = 0; i < paths; ++i) prod[i] = (a[i] - ma) * (b[i] - mb);
    EXPECT_TRUE(oracle::sample_mean(prod).within(cov_integrated_vol(moments(d).v, 1.0, 1.0, 1)));
}

TEST(CorrSquaredReturns, ShapeFollowsR) {
    const double mu = 1.0, v = 1.0, lambda = 0.9, delta = 1.0;
    for (int s = 1; s <= 5; ++s) {
        const double ratio = corr_squared_returns(mu, v, lambda, delta, s + 1) / corr_squared_returns(mu, v, lambda, delta, s);
        EXPECT_NEAR(ratio, big_r(lambda, delta, s + 1).closed_form / big_r(lambda, delta, s).closed_form, 1e-13);
    }
    EXPECT_TRUE(std::isfinite(corr_squared_returns(0.0, 1.0, 1.0, 1.0, 1)));
    EXPECT_GT(rbar_fn(1.0, 1.0), 0.0);
    EXPECT_THROW(corr_squared_returns(1.0, 0.0, 1.0, 1.0, 1), DomainError);
}

TEST(CorrSquaredReturns, DriverMeanVariantUsesMu) {
    // With mu in place of E X = 2 mu the denominator shrinks, so the variant is larger.
    EXPECT_GT(corr_squared_returns_printed(1.0, 1.0, 1.0, 1.0, 1), corr_squared_returns(1.0, 1.0, 1.0, 1.0, 1));
    EXPECT_DOUBLE_EQ(corr_squared_returns_printed(2.0, 1.0, 1.0, 1.0, 1), corr_squared_returns(1.0, 1.0, 1.0, 1.0, 1));
}
