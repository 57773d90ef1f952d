#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wbou/common.hpp"
#include "wbou/levy_driver.hpp"
#include "wbou/random.hpp"

namespace wbou {

/// Uniform grid t_k = k * dt, k = 0..steps.
class SimulationGrid {
public:
    /// Throws GridError unless t_max > 0, dt > 0 and t_max is an integer
    /// multiple of dt (to 1e-9 relative).
    static SimulationGrid make(double t_max, double dt);

    double dt() const { return dt_; }
    std::size_t steps() const { return steps_; }
    std::size_t points() const { return steps_ + 1; }
    double t_max() const { return dt_ * static_cast<double>(steps_); }
    double time(std::size_t k) const { return dt_ * static_cast<double>(k); }

    /// Number of grid steps spanning `length`; throws GridError when length is
    /// not an integer multiple of dt.
    std::size_t steps_for(double length) const;

private:
    SimulationGrid(double dt, std::size_t steps) : dt_(dt), steps_(steps) {}
    double dt_;
    std::size_t steps_;
};

/// Truncation of the half-line integrals behind G and the tail of H.
struct TruncationPolicy {
    double tol = 1e-12;

    void validate() const;
    /// T = -ln(tol) / lambda, so that exp(-lambda T) <= tol.
    double horizon(double lambda) const;
    /// ceil(T / dt)
    std::size_t steps(double lambda, double dt) const;
};

/// Independent substreams of one path: the past axis feeds L on (-inf, 0],
/// the future axis feeds L on [0, inf).
struct PathStreams {
    Stream past;
    Stream future;

    static PathStreams derive(std::uint64_t root_seed, std::uint64_t path_index);
};

/// Driver increments on a uniform grid of step dt.
///   past[m]   : L(-m dt) - L(-(m+1) dt)
///   window[k] : L(t_{k+1}) - L(t_k), k < steps
///   future[m] : L(t_max + (m+1) dt) - L(t_max + m dt)
struct DriverIncrements {
    std::vector<double> past;
    std::vector<double> window;
    std::vector<double> future;
};

/// Draws increments; each increment has the law of L over increment_dt
/// (dt under the natural clock, lambda * dt under the scaled clock).
DriverIncrements draw_increments(const Driver& driver, double increment_dt, std::size_t past_steps,
                                 std::size_t window_steps, std::size_t future_steps,
                                 PathStreams& streams);

/// Sums consecutive blocks of `factor` increments, i.e. the same driver path
/// seen on a grid `factor` times coarser. Trailing partial blocks of the
/// past and future parts are dropped; window.size() must be divisible.
DriverIncrements coarsen(const DriverIncrements& fine, std::size_t factor);

/// A simulated grid path of X with the pieces of
///   X_t = e^{-lambda t}(G + I_t) + e^{lambda t}(H - J_t) = X^-_t + X^+_t.
struct WbouPath {
    SimulationGrid grid;
    double lambda = 0.0;
    std::vector<double> x;
    std::vector<double> x_minus;
    std::vector<double> x_plus;
    double g = 0.0;
    double h = 0.0;
    /// I_{t_k} and J_{t_k}; left empty when lambda * t_max exceeds
    /// kDecompositionExponentLimit, where e^{lambda t} overflows.
    std::vector<double> i_vals;
    std::vector<double> j_vals;
    std::vector<double> dl;
    std::vector<double> l_cum;

    static constexpr double kDecompositionExponentLimit = 700.0;
    bool has_decomposition() const { return !i_vals.empty(); }
};

/// X with its zero-start variant Y_t = X_t - X_0.
struct ZeroStartPath {
    WbouPath base;
    std::vector<double> y;
};

/// Plain grid path (OU and compact-kernel processes).
struct GridPath {
    SimulationGrid grid;
    std::vector<double> values;
};

/// Deterministic core: every stochastic integral is discretized with the
/// kernel evaluated at the left endpoint of each increment interval.
/// `increments.window` must have grid.steps() entries (GridMismatch).
WbouPath wbou_from_increments(double lambda, const SimulationGrid& grid,
                              const DriverIncrements& increments);

WbouPath simulate_wbou(const Driver& driver, double lambda, const SimulationGrid& grid,
                       const TruncationPolicy& trunc, PathStreams& streams,
                       TimeScale clock = TimeScale::natural);

ZeroStartPath simulate_y(const Driver& driver, double lambda, const SimulationGrid& grid,
                         const TruncationPolicy& trunc, PathStreams& streams,
                         TimeScale clock = TimeScale::natural);

/// Stationary OU path U_t = int_{-inf}^t e^{-lambda(t-s)} dL_s. Given the same
/// streams it consumes the same window increments as simulate_wbou, so the
/// result coincides with WbouPath::x_minus.
GridPath ou_from_increments(double lambda, const SimulationGrid& grid,
                            const DriverIncrements& increments);

GridPath simulate_ou(const Driver& driver, double lambda, const SimulationGrid& grid,
                     const TruncationPolicy& trunc, PathStreams& streams);

/// X_t = int_{t-a}^t e^{-lambda(t-s)} dL_s; `increments.past` must hold at
/// least a / dt entries.
GridPath compact_from_increments(double lambda, double window, const SimulationGrid& grid,
                                 const DriverIncrements& increments);

GridPath simulate_compact_kernel(const Driver& driver, double lambda, double window,
                                 const SimulationGrid& grid, PathStreams& streams);

/// One draw of X_0 = G + H from a path of a single step.
double sample_x0(const Driver& driver, double lambda, double dt, const TruncationPolicy& trunc,
                 PathStreams& streams, TimeScale clock = TimeScale::natural);

double path_total_variation(std::span<const double> path);
double max_abs_increment(std::span<const double> path);

/// max_k |x_k - x_0 - lambda * sum_{j<k} (x^+_j - x^-_j) dt|
double derivative_identity_residual(const WbouPath& path);

}  // namespace wbou
