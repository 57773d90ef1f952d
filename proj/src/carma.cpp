#include "wbou/carma.hpp"

#include <cmath>
#include <string>

#include "wbou/error.hpp"

namespace wbou {

CarmaSpec CarmaSpec::make(double lambda, double g, double h) {
    if (!(lambda > 0.0)) throw InvalidLambda("lambda must be > 0");
    CarmaSpec s;
    s.lambda = lambda;
    s.a_matrix << 0.0, 1.0, lambda * lambda, 0.0;
    s.b << -2.0 * lambda, 0.0;
    s.r0 << -(g + h) / (2.0 * lambda), (g - h) / 2.0;
    return s;
}

Eigen::Matrix2d mat_exp_at(double lambda, double t) {
    const double x = lambda * t;
    const double c = std::cosh(x), s = std::sinh(x);
    Eigen::Matrix2d m;
    m << c, s / lambda, lambda * s, c;
    return m;
}

CarmaSpec carma_from_wbou(const WbouPath& path) { return CarmaSpec::make(path.lambda, path.g, path.h); }

std::vector<Eigen::Vector2d> simulate_carma_states(const CarmaSpec& spec,
                                                   std::span<const double> dl,
                                                   const SimulationGrid& grid,
                                                   double growth_limit) {
    if (dl.size() != grid.steps()) {
        throw GridMismatch("carma: " + std::to_string(dl.size()) + " increments for " +
                           std::to_string(grid.steps()) + " grid steps");
    }
    if (spec.lambda * grid.t_max() > growth_limit) {
        throw DomainError("carma: lambda * t_max = " + std::to_string(spec.lambda * grid.t_max()) +
                          " exceeds the growth limit " + std::to_string(growth_limit));
    }
    const Eigen::Matrix2d step = mat_exp_at(spec.lambda, grid.dt());
    std::vector<Eigen::Vector2d> states(grid.points());
    states[0] = spec.r0;
    for (std::size_t k = 0; k < dl.size(); ++k) {
        Eigen::Vector2d r = states[k];
        r(1) += dl[k];
        states[k + 1] = step * r;
    }
    return states;
}

std::vector<double> simulate_carma(const CarmaSpec& spec, std::span<const double> dl,
                                   const SimulationGrid& grid, double growth_limit) {
    const auto states = simulate_carma_states(spec, dl, grid, growth_limit);
    std::vector<double> out(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) out[k] = spec.b.dot(states[k]);
    return out;
}

}  // namespace wbou
