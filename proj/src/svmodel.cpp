#include "wbou/svmodel.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <string>

#include "wbou/error.hpp"

namespace wbou {

namespace {

void check_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidLambda("lambda must be > 0");
}

void check_lag_args(double lambda, double delta, int s) {
    check_lambda(lambda);
    if (!(delta > 0.0)) throw DomainError("delta must be > 0");
    if (s < 1) throw DomainError("s must be >= 1");
}

}  // namespace

void SvSpec::validate() const {
    check_lambda(lambda);
    if (!std::isfinite(alpha) || !std::isfinite(beta)) throw DomainError("alpha, beta must be finite");
    if (!driver.nonnegative()) {
        throw NotASubordinator("volatility driver " + driver.describe() + " is not a subordinator");
    }
}

SvStreams SvStreams::derive(std::uint64_t root_seed, std::uint64_t path_index) {
    return {PathStreams::derive(root_seed, path_index),
            Stream::derive(root_seed, path_index, Axis::brownian)};
}

SvPath simulate_sv(const SvSpec& spec, const SimulationGrid& grid, SvStreams& streams,
                   const TruncationPolicy& trunc) {
    spec.validate();
    WbouPath vol = simulate_wbou(spec.driver, spec.lambda, grid, trunc, streams.volatility,
                                 TimeScale::scaled);
    const std::size_t n = grid.steps();
    const double dt = grid.dt();
    const double sq_dt = std::sqrt(dt);

    SvPath p{.grid = grid};
    p.y.assign(n + 1, 0.0);
    p.int_x.assign(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double xk = vol.x[k];
        p.y[k + 1] = p.y[k] + (spec.alpha + spec.beta * xk) * dt +
                     std::sqrt(std::max(xk, 0.0)) * sq_dt * streams.brownian.normal();
        p.int_x[k + 1] = p.int_x[k] + 0.5 * (xk + vol.x[k + 1]) * dt;
    }
    p.x = std::move(vol.x);
    p.x_minus = std::move(vol.x_minus);
    p.x_plus = std::move(vol.x_plus);
    p.l_scaled = std::move(vol.l_cum);
    return p;
}

std::vector<double> integrated_vol_explicit(const SvPath& path, double lambda) {
    check_lambda(lambda);
    const std::size_t n = path.grid.points();
    if (path.x_minus.size() != n || path.x_plus.size() != n || path.l_scaled.size() != n) {
        throw MissingComponents("integrated volatility needs x_minus, x_plus and L on the grid");
    }
    const double start = path.x_minus[0] - path.x_plus[0];
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = (2.0 * path.l_scaled[k] + start - (path.x_minus[k] - path.x_plus[k])) / lambda;
    }
    return out;
}

double r_fn(double lambda, double t) {
    check_lambda(lambda);
    if (!(t >= 0.0)) throw DomainError("t must be >= 0");
    const double lt = lambda * t;
    return (1.0 + lt) * std::exp(-lt);
}

namespace {

template <class T>
T rbar_closed(T lambda, T t) {
    using std::exp;
    const T x = lambda * t;
    const T e = exp(-x);
    return (x * e + 2 * x + 3 * e - 3) / (lambda * lambda);
}

}  // namespace

double rbar_fn(double lambda, double t) {
    check_lambda(lambda);
    if (!(t >= 0.0)) throw DomainError("t must be >= 0");
    const double x = lambda * t;
    if (x < 1e-3) {
        // Taylor series; the closed form cancels to nothing here.
        const double x2 = x * x;
        return t * t * (0.5 - x2 / 24.0 + x2 * x / 60.0 - x2 * x2 / 240.0);
    }
    return rbar_closed(lambda, t);
}

BigR big_r(double lambda, double delta, int s) {
    check_lag_args(lambda, delta, s);
    // The second difference cancels about lambda * delta * s / ln 10 digits,
    // so it is formed in 50-digit arithmetic.
    using Wide = boost::multiprecision::cpp_bin_float_50;
    const Wide l(lambda), d(delta), sw(s);
    const Wide up = rbar_closed<Wide>(l, d * (sw + 1));
    const Wide mid = rbar_closed<Wide>(l, d * sw);
    const Wide down = s == 1 ? Wide(0) : rbar_closed<Wide>(l, d * (sw - 1));

    const double ld = lambda * delta;
    const double lds = ld * static_cast<double>(s);
    const double sh = std::sinh(0.5 * ld);
    // e^{-ld} + e^{ld} - 2 = 4 sinh^2(ld/2), e^{-ld} - e^{ld} = -2 sinh(ld)
    const double closed = std::exp(-lds) / (lambda * lambda) *
                          ((lds + 3.0) * 4.0 * sh * sh - ld * 2.0 * std::sinh(ld));

    BigR r;
    r.second_difference = static_cast<double>(up - 2 * mid + down);
    r.closed_form = closed;
    r.consistent = std::abs(r.second_difference - r.closed_form) <= 1e-10 * std::abs(r.closed_form);
    return r;
}

double cov_integrated_vol(double v, double lambda, double delta, int s) {
    if (!(v >= 0.0)) throw DomainError("V must be >= 0");
    return v * big_r(lambda, delta, s).closed_form;
}

double corr_squared_returns(double mu, double v, double lambda, double delta, int s) {
    if (!(v > 0.0)) throw DomainError("V must be > 0");
    const double mean_x = 2.0 * mu;
    return big_r(lambda, delta, s).closed_form /
           (6.0 * rbar_fn(lambda, delta) + 2.0 * delta * delta * mean_x * mean_x / v);
}

double corr_squared_returns_printed(double mu, double v, double lambda, double delta, int s) {
    if (!(v > 0.0)) throw DomainError("V must be > 0");
    return big_r(lambda, delta, s).closed_form /
           (6.0 * rbar_fn(lambda, delta) + 2.0 * delta * delta * mu * mu / v);
}

}  // namespace wbou
