#include "wbou/path_engine.hpp"

#include <cmath>
#include <string>

#include "wbou/error.hpp"
#include "wbou/simd/kernels.hpp"

namespace wbou {

namespace {

void check_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidLambda("lambda must satisfy lambda > 0 (got " + std::to_string(lambda) + ")");
    }
}

double increment_dt(double lambda, double dt, TimeScale clock) {
    return clock == TimeScale::scaled ? lambda * dt : dt;
}

}  // namespace

SimulationGrid SimulationGrid::make(double t_max, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw GridError("dt must be > 0");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw GridError("t_max must be > 0");
    const double ratio = t_max / dt;
    const double n = std::round(ratio);
    if (n < 1.0 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
        throw GridError("t_max = " + std::to_string(t_max) +
                        " is not an integer multiple of dt = " + std::to_string(dt));
    }
    return SimulationGrid(dt, static_cast<std::size_t>(n));
}

std::size_t SimulationGrid::steps_for(double length) const {
    const double ratio = length / dt_;
    const double n = std::round(ratio);
    if (!(length > 0.0) || n < 1.0 || std::abs(ratio - n) > 1e-9 * std::max(1.0, ratio)) {
        throw GridError("length " + std::to_string(length) +
                        " is not a positive integer multiple of dt = " + std::to_string(dt_));
    }
    return static_cast<std::size_t>(n);
}

void TruncationPolicy::validate() const {
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("truncation tol must lie in (0, 1)");
}

double TruncationPolicy::horizon(double lambda) const { return -std::log(tol) / lambda; }

std::size_t TruncationPolicy::steps(double lambda, double dt) const {
    return static_cast<std::size_t>(std::ceil(horizon(lambda) / dt));
}

PathStreams PathStreams::derive(std::uint64_t root_seed, std::uint64_t path_index) {
    return {Stream::derive(root_seed, path_index, Axis::past),
            Stream::derive(root_seed, path_index, Axis::future)};
}

DriverIncrements draw_increments(const Driver& driver, double increment_dt, std::size_t past_steps,
                                 std::size_t window_steps, std::size_t future_steps,
                                 PathStreams& streams) {
    DriverIncrements inc;
    inc.past.resize(past_steps);
    inc.window.resize(window_steps);
    inc.future.resize(future_steps);
    sample_increments(driver, increment_dt, streams.past, inc.past);
    // Window first, then the tail: the positive axis is one continuous stream.
    sample_increments(driver, increment_dt, streams.future, inc.window);
    sample_increments(driver, increment_dt, streams.future, inc.future);
    return inc;
}

DriverIncrements coarsen(const DriverIncrements& fine, std::size_t factor) {
    if (factor == 0) throw DomainError("coarsen: factor must be >= 1");
    if (fine.window.size() % factor != 0) {
        throw GridMismatch("coarsen: window length is not divisible by the factor");
    }
    auto blocks = [factor](const std::vector<double>& v) {
        std::vector<double> out(v.size() / factor, 0.0);
        for (std::size_t b = 0; b < out.size(); ++b) {
            for (std::size_t i = 0; i < factor; ++i) out[b] += v[b * factor + i];
        }
        return out;
    };
    return {blocks(fine.past), blocks(fine.window), blocks(fine.future)};
}

WbouPath wbou_from_increments(double lambda, const SimulationGrid& grid,
                              const DriverIncrements& inc) {
    check_lambda(lambda);
    const std::size_t n = grid.steps();
    if (inc.window.size() != n) {
        throw GridMismatch("window increments (" + std::to_string(inc.window.size()) +
                           ") do not match grid steps (" + std::to_string(n) + ")");
    }
    const double dt = grid.dt();
    const double q = std::exp(-lambda * dt);

    WbouPath p{.grid = grid, .lambda = lambda};
    p.dl = inc.window;
    p.x_minus.resize(n + 1);
    p.x_plus.resize(n + 1);
    p.x.resize(n + 1);
    p.l_cum.resize(n + 1);

    // G = sum_m e^{-lambda (m+1) dt} past[m]
    double g = 0.0;
    for (std::size_t m = inc.past.size(); m-- > 0;) g = q * (inc.past[m] + g);
    // e^{lambda t_max} * (tail of H) = sum_m e^{-lambda m dt} future[m]
    double tail = 0.0;
    for (std::size_t m = inc.future.size(); m-- > 0;) tail = inc.future[m] + q * tail;

    p.x_minus[0] = g;
    for (std::size_t k = 0; k < n; ++k) p.x_minus[k + 1] = q * (p.x_minus[k] + p.dl[k]);
    p.x_plus[n] = tail;
    for (std::size_t k = n; k-- > 0;) p.x_plus[k] = p.dl[k] + q * p.x_plus[k + 1];
    for (std::size_t k = 0; k <= n; ++k) p.x[k] = p.x_minus[k] + p.x_plus[k];

    p.l_cum[0] = 0.0;
    for (std::size_t k = 0; k < n; ++k) p.l_cum[k + 1] = p.l_cum[k] + p.dl[k];

    p.g = g;
    p.h = p.x_plus[0];

    if (lambda * grid.t_max() <= WbouPath::kDecompositionExponentLimit) {
        p.i_vals.assign(n + 1, 0.0);
        p.j_vals.assign(n + 1, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double t = grid.time(k);
            p.i_vals[k + 1] = p.i_vals[k] + std::exp(lambda * t) * p.dl[k];
            p.j_vals[k + 1] = p.j_vals[k] + std::exp(-lambda * t) * p.dl[k];
        }
    }
    return p;
}

WbouPath simulate_wbou(const Driver& driver, double lambda, const SimulationGrid& grid,
                       const TruncationPolicy& trunc, PathStreams& streams, TimeScale clock) {
    check_lambda(lambda);
    trunc.validate();
    const std::size_t m = trunc.steps(lambda, grid.dt());
    const auto inc = draw_increments(driver, increment_dt(lambda, grid.dt(), clock), m,
                                     grid.steps(), m, streams);
    return wbou_from_increments(lambda, grid, inc);
}

ZeroStartPath simulate_y(const Driver& driver, double lambda, const SimulationGrid& grid,
                         const TruncationPolicy& trunc, PathStreams& streams, TimeScale clock) {
    ZeroStartPath out{simulate_wbou(driver, lambda, grid, trunc, streams, clock), {}};
    const auto& x = out.base.x;
    out.y.resize(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out.y[k] = x[k] - x[0];
    out.y[0] = 0.0;
    return out;
}

GridPath ou_from_increments(double lambda, const SimulationGrid& grid,
                            const DriverIncrements& inc) {
    check_lambda(lambda);
    const std::size_t n = grid.steps();
    if (inc.window.size() != n) throw GridMismatch("window increments do not match grid steps");
    const double q = std::exp(-lambda * grid.dt());
    GridPath out{grid, std::vector<double>(n + 1)};
    double g = 0.0;
    for (std::size_t m = inc.past.size(); m-- > 0;) g = q * (inc.past[m] + g);
    out.values[0] = g;
    for (std::size_t k = 0; k < n; ++k) out.values[k + 1] = q * (out.values[k] + inc.window[k]);
    return out;
}

GridPath simulate_ou(const Driver& driver, double lambda, const SimulationGrid& grid,
                     const TruncationPolicy& trunc, PathStreams& streams) {
    check_lambda(lambda);
    trunc.validate();
    const std::size_t m = trunc.steps(lambda, grid.dt());
    const auto inc = draw_increments(driver, grid.dt(), m, grid.steps(), 0, streams);
    return ou_from_increments(lambda, grid, inc);
}

GridPath compact_from_increments(double lambda, double window, const SimulationGrid& grid,
                                 const DriverIncrements& inc) {
    check_lambda(lambda);
    const std::size_t w = grid.steps_for(window);
    const std::size_t n = grid.steps();
    if (inc.window.size() != n) throw GridMismatch("window increments do not match grid steps");
    if (inc.past.size() < w) throw GridMismatch("compact kernel needs a / dt past increments");

    // Increment on [t_j, t_{j+1}] for j in [-w, n).
    auto dl = [&](std::ptrdiff_t j) {
        return j < 0 ? inc.past[static_cast<std::size_t>(-j - 1)]
                     : inc.window[static_cast<std::size_t>(j)];
    };
    const double q = std::exp(-lambda * grid.dt());
    const double q_end = std::pow(q, static_cast<double>(w + 1));

    GridPath out{grid, std::vector<double>(n + 1)};
    double x0 = 0.0;
    for (std::size_t m = w; m >= 1; --m) x0 = q * (dl(-static_cast<std::ptrdiff_t>(m)) + x0);
    out.values[0] = x0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto kk = static_cast<std::ptrdiff_t>(k);
        out.values[k + 1] = q * (out.values[k] + dl(kk)) - q_end * dl(kk - static_cast<std::ptrdiff_t>(w));
    }
    return out;
}

GridPath simulate_compact_kernel(const Driver& driver, double lambda, double window,
                                 const SimulationGrid& grid, PathStreams& streams) {
    check_lambda(lambda);
    const std::size_t w = grid.steps_for(window);
    const auto inc = draw_increments(driver, grid.dt(), w, grid.steps(), 0, streams);
    return compact_from_increments(lambda, window, grid, inc);
}

double sample_x0(const Driver& driver, double lambda, double dt, const TruncationPolicy& trunc,
                 PathStreams& streams, TimeScale clock) {
    check_lambda(lambda);
    trunc.validate();
    if (!(dt > 0.0)) throw GridError("dt must be > 0");
    const std::size_t m = trunc.steps(lambda, dt);
    const double q = std::exp(-lambda * dt);
    const double idt = increment_dt(lambda, dt, clock);
    // Same left-endpoint weights as wbou_from_increments: e^{-lambda(m+1)dt}
    // on the past axis, e^{-lambda m dt} on the future axis.
    double g = 0.0, w = q;
    for (std::size_t i = 0; i < m; ++i, w *= q) g += w * sample_increment(driver, idt, streams.past);
    double h = 0.0;
    w = 1.0;
    for (std::size_t i = 0; i < m; ++i, w *= q) h += w * sample_increment(driver, idt, streams.future);
    return g + h;
}

double path_total_variation(std::span<const double> path) { return simd::sum_abs_diff(path); }

double max_abs_increment(std::span<const double> path) { return simd::max_abs_diff(path); }

double derivative_identity_residual(const WbouPath& path) {
    if (path.x_minus.size() != path.x.size() || path.x_plus.size() != path.x.size()) {
        throw MissingComponents("derivative identity needs x_minus and x_plus");
    }
    const double dt = path.grid.dt();
    double integral = 0.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < path.x.size(); ++k) {
        const double r = std::abs(path.x[k] - path.x[0] - path.lambda * integral);
        worst = std::max(worst, r);
        integral += (path.x_plus[k] - path.x_minus[k]) * dt;
    }
    return worst;
}

}  // namespace wbou
