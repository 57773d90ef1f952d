#pragma once

#include <cstdint>
#include <vector>

#include "wbou/levy_driver.hpp"
#include "wbou/path_engine.hpp"

namespace wbou {

/// dY_t = (alpha + beta X_t) dt + sqrt(X_t) dW_t, where X is the WBOU
/// process driven on the scaled clock, X_t = int e^{-lambda|t-u|} dL_{lambda u}.
struct SvSpec {
    double alpha = 0.0;
    double beta = 0.0;
    double lambda = 1.0;
    Driver driver = Driver::gamma_subordinator(1.0, 1.0);

    /// Throws InvalidLambda, or NotASubordinator when the driver can decrease.
    void validate() const;
};

struct SvStreams {
    PathStreams volatility;
    Stream brownian;

    static SvStreams derive(std::uint64_t root_seed, std::uint64_t path_index);
};

struct SvPath {
    SimulationGrid grid;
    std::vector<double> y;
    std::vector<double> x;
    std::vector<double> int_x;  // trapezoid rule, int_x[0] = 0
    std::vector<double> x_minus;
    std::vector<double> x_plus;
    std::vector<double> l_scaled;  // L_{lambda t_k}, L_0 = 0
};

/// Y starts at 0 and is advanced by Euler-Maruyama with left-endpoint X.
SvPath simulate_sv(const SvSpec& spec, const SimulationGrid& grid, SvStreams& streams,
                   const TruncationPolicy& trunc = {});

/// (1/lambda)(2 L_{lambda t} + X^-_0 - X^+_0 - (X^-_t - X^+_t)) at every grid time.
std::vector<double> integrated_vol_explicit(const SvPath& path, double lambda);

/// r(t) = (1 + lambda t) e^{-lambda t}
double r_fn(double lambda, double t);
/// rbar(t) = int_0^t int_0^u r(v) dv du
///         = (lambda t e^{-lambda t} + 2 lambda t + 3 e^{-lambda t} - 3) / lambda^2
double rbar_fn(double lambda, double t);

struct BigR {
    double second_difference;  // rbar(D(s+1)) - 2 rbar(Ds) + rbar(D(s-1))
    double closed_form;
    /// |second_difference - closed_form| <= 1e-10 |closed_form|
    bool consistent;
};

BigR big_r(double lambda, double delta, int s);

/// Cov of integrated volatility over [(n-1)D, nD] and [(n+s-1)D, (n+s)D]: V R(Ds).
double cov_integrated_vol(double v, double lambda, double delta, int s);

/// Corr of squared returns s periods apart with alpha = beta = 0:
/// R(Ds) / (6 rbar(D) + 2 D^2 m^2 / V) where m = E X = 2 mu.
double corr_squared_returns(double mu, double v, double lambda, double delta, int s);

/// Variant R(Ds) / (6 rbar(D) + 2 D^2 mu^2 / V) with the driver mean mu in
/// place of E X; it understates the mean of X by a factor of two.
double corr_squared_returns_printed(double mu, double v, double lambda, double delta, int s);

}  // namespace wbou
