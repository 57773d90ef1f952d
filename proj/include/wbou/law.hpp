#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "wbou/common.hpp"
#include "wbou/levy_driver.hpp"
#include "wbou/path_engine.hpp"

namespace wbou {

struct ExistenceResult {
    bool ok = true;
    std::string reason;  // empty when ok

    explicit operator bool() const { return ok; }
};

/// X exists iff lambda > 0 and the driver has a finite log-moment.
/// Reports rather than throws.
ExistenceResult existence_check(const Driver& driver, double lambda);

/// Infinitely divisible marginal law of X_t.
///
/// The Lévy measure of X is the image of nu x Leb under
/// (x, s) -> x exp(-lambda |s|). It has no closed form in general and is
/// exposed through tails, density and integrals over nu.
struct MarginalLaw {
    LevyTriplet triplet;
    double lambda = 0.0;
    TimeScale clock = TimeScale::natural;

    /// nu_X([y, inf)) = c int_{x >= y} ln(x / y) nu(dx), c = 2/lambda
    /// (c = 2 under the scaled clock).
    double tail_above(double y) const { return triplet.measure->tail_above(y); }
    /// nu_X((-inf, -y])
    double tail_below(double y) const { return triplet.measure->tail_below(y); }
    /// c nu(|y| and beyond) / |y|; always exists.
    double density(double y) const { return triplet.measure->density(y).value_or(0.0); }
};

/// Throws ExistenceViolation when existence_check fails.
MarginalLaw triplet_of_x(const Driver& driver, double lambda,
                         TimeScale clock = TimeScale::natural);

/// E exp(iuX_0) = exp(int psi(u e^{-lambda|s|}) ds) over |s| <= T_trunc.
std::complex<double> char_fn_x(const Driver& driver, double lambda, double u,
                               TimeScale clock = TimeScale::natural,
                               const TruncationPolicy& trunc = {});

/// E exp(i sum_j u_j X_{t_j}); times strictly increasing, same size as us.
std::complex<double> char_fn_joint(const Driver& driver, double lambda,
                                   std::span<const double> times, std::span<const double> us,
                                   TimeScale clock = TimeScale::natural,
                                   const TruncationPolicy& trunc = {});

/// kbar(theta) = log E exp(-theta X) under the scaled clock
///             = 2 int_0^inf k(theta e^{-u}) du = 2 int_0^theta k(v)/v dv.
double kbar(const Driver& driver, double theta);

using DensityFn = std::function<double(double)>;

/// gbar(y) = 2 int_1^inf g(xy) dx = (2/y) int_y^inf g(w) dw.
double gbar_from_g(const DensityFn& g, double y);

/// g(y) = (-gbar(y) - y gbar'(y)) / 2.
double g_from_gbar(const DensityFn& gbar, const DensityFn& gbar_prime, double y);

}  // namespace wbou
