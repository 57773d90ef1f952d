#pragma once

#include <functional>
#include <span>

namespace wbou::quad {

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (31 points) on a finite interval. Terminates when
/// the error estimate drops below rel_tol times the integral of |f|.
double finite(const Integrand& f, double a, double b, double rel_tol = 1e-13);

/// Same as finite(), after splitting [a, b] at the given interior points.
/// Points outside (a, b) are ignored.
double finite_with_breaks(const Integrand& f, double a, double b,
                          std::span<const double> breaks, double rel_tol = 1e-13);

/// Double-exponential (tanh-sinh) rule on a finite interval; tolerates
/// integrable endpoint singularities.
double singular(const Integrand& f, double a, double b, double rel_tol = 1e-13);

/// Double-exponential (exp-sinh) rule on [a, inf).
double half_line(const Integrand& f, double a, double rel_tol = 1e-13);

}  // namespace wbou::quad
