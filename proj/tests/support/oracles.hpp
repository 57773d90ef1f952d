#pragma once

// Reference computations for the tests. None of them call the library routine
// they are used to check; they integrate definitions directly with Boost
// quadrature or sample statistics.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wbou/levy_driver.hpp"
#include "wbou/law.hpp"

namespace oracle {

using Fn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod on [a, b] split at the given points.
double integrate(const Fn& f, double a, double b, std::span<const double> breaks = {},
                 double tol = 1e-13);

/// Point beyond which both tails of nu carry less than 1e-20 mass.
double measure_cutoff(const wbou::LevyMeasure& nu);

/// psi(u) = iu gamma - sigma^2 u^2 / 2 + int (e^{iux} - 1 - iux 1{|x|<=1}) nu(dx),
/// integrating the density and summing atoms.
std::complex<double> lk_psi(const wbou::LevyTriplet& t, double u);

/// int_0^1 [gamma + int x 1{1 < |x| <= 1/v} nu(dx)] dv times 2/lambda: the
/// general drift of int f dL for f(s) = e^{-lambda|s|}.
double gamma_f_quadrature(const wbou::Driver& driver, double lambda);

/// nu_X([y, inf)) = int ds nu([y e^{lambda|s|}, inf)) = 2 int_0^inf nu([y e^{lambda s}, inf)) ds.
double pushforward_tail_above(const wbou::LevyMeasure& nu, double lambda, double y);
double pushforward_tail_below(const wbou::LevyMeasure& nu, double lambda, double y);

/// exp(iu gamma_X - sigma_X^2 u^2 / 2 + int (e^{iuy} - 1 - iuy 1{|y|<=1}) g_X(y) dy)
/// from the marginal triplet, with g_X the law's density.
std::complex<double> lk_cf_from_law(const wbou::MarginalLaw& law, std::span<const double> breaks,
                                    double u);

/// Derivatives f^(n)(0), n = 0..max_order, of the degree-(nodes-1) Chebyshev
/// interpolant of f on [0, h].
std::vector<double> chebyshev_derivatives_at_zero(const Fn& f, double h, int nodes, int max_order);

/// int_0^t int_0^u (1 + lambda v) e^{-lambda v} dv du by nested quadrature.
double rbar_nested(double lambda, double t);

/// sum_{n < terms} (A t)^n / n!
Eigen::Matrix2d expm_series(const Eigen::Matrix2d& a, double t, int terms = 30);

/// min over a 10^4-point log grid of [lo, hi] of f.
struct GridMin {
    double arg;
    double value;
};
GridMin grid_minimum(const Fn& f, double lo, double hi, int points = 10000);

// Sample statistics with standard errors.
struct Estimate {
    double value;
    double se;
    /// |value - target| <= k se
    bool within(double target, double k = 4.0) const;
};

Estimate sample_mean(std::span<const double> x);
/// Unbiased variance; SE from the sample fourth central moment.
Estimate sample_variance(std::span<const double> x);
/// Pearson correlation with the delta-method (influence function) SE.
Estimate sample_correlation(std::span<const double> x, std::span<const double> y);

/// Empirical characteristic function (1/n) sum exp(iu x_j).
std::complex<double> empirical_cf(std::span<const double> x, double u);

}  // namespace oracle
