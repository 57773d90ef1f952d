#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "wbou/path_engine.hpp"

namespace wbou {

/// CARMA(2,0) form of X: X_t = b' R_t with
///   dR1 = R2 dt,  dR2 = lambda^2 R1 dt + dL_t.
/// The initial state depends on H, i.e. on the whole future of L, so it can
/// only be taken from a simulated path.
struct CarmaSpec {
    double lambda = 0.0;
    Eigen::Matrix2d a_matrix;  // [[0, 1], [lambda^2, 0]]
    Eigen::Vector2d b;         // (-2 lambda, 0)
    Eigen::Vector2d r0;        // (-(G + H) / (2 lambda), (G - H) / 2)

    static CarmaSpec make(double lambda, double g, double h);
};

/// e^{At} = [[cosh lt, sinh lt / l], [l sinh lt, cosh lt]].
Eigen::Matrix2d mat_exp_at(double lambda, double t);

CarmaSpec carma_from_wbou(const WbouPath& path);

/// e^{At} grows like e^{lambda t}; runs with lambda * t_max above this bound
/// are rejected.
inline constexpr double kCarmaGrowthLimit = 30.0;

/// States R_{t_k} of R_{k+1} = e^{A dt}(R_k + (0, dl_k)'), the increment
/// entering at the start of its interval.
std::vector<Eigen::Vector2d> simulate_carma_states(const CarmaSpec& spec,
                                                   std::span<const double> dl,
                                                   const SimulationGrid& grid,
                                                   double growth_limit = kCarmaGrowthLimit);

/// b' R_{t_k}, k = 0..steps.
std::vector<double> simulate_carma(const CarmaSpec& spec, std::span<const double> dl,
                                   const SimulationGrid& grid,
                                   double growth_limit = kCarmaGrowthLimit);

}  // namespace wbou
