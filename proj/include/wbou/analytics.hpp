#pragma once

#include "wbou/levy_driver.hpp"

namespace wbou {

/// Second-order parameters of X: mean reversion lambda, driver mean mu = E L(1)
/// and driver variance V = Var L(1).
struct SecondOrderParams {
    double lambda;
    double mu;
    double v;

    /// Throws InvalidLambda / DomainError.
    void validate() const;
    static SecondOrderParams from_driver(const Driver& driver, double lambda);
};

double mean_x(const SecondOrderParams& p);  // 2 mu / lambda
double var_x(const SecondOrderParams& p);   // V / lambda

/// Cov(X_{t+h}, X_t) = V (h + 1/lambda) e^{-lambda h}. Lags h < 0 throw NegativeLag.
double acov_x(const SecondOrderParams& p, double h);
double acf_x(const SecondOrderParams& p, double h);
/// e^{-lambda h}
double acf_ou(const SecondOrderParams& p, double h);
/// E(X_{t+h} - X_t)^2 = (2V/lambda)(1 - e^{-lambda h} - lambda h e^{-lambda h})
double msd(const SecondOrderParams& p, double h);

/// Corr(X_{k+1} - X_k, X_1 - X_0), k >= 1, from the autocovariance:
/// (2 acov(k) - acov(k+1) - acov(k-1)) / (2 (acov(0) - acov(1))).
double increment_acf(const SecondOrderParams& p, int k);

/// Expanded closed forms, kept for audit against increment_acf. They agree
/// with it to round-off.
double increment_acf_printed(const SecondOrderParams& p, int k);
double first_order_increment_acf_printed(const SecondOrderParams& p);

/// Increment autocorrelation of the classical OU process; in (-1/2, 0).
double increment_acf_ou(const SecondOrderParams& p, int k);

/// Root in [0.5, 3] of lambda -> increment_acf(lambda, k = 1), by bisection to 1e-8.
double lambda_sign_threshold();

/// E Y_t = 0 for Y_t = X_t - X_0.
double mean_y(const SecondOrderParams& p, double t);
/// var(Y_t) = msd(t).
double var_y(const SecondOrderParams& p, double t);
/// V t e^{-lambda t} + (V/lambda) e^{-lambda t}, kept for comparison; this
/// is Cov(X_t, X_0), not the variance of Y_t.
double var_y_printed(const SecondOrderParams& p, double t);

/// Cov(X_t, X_s) for X_t = int_{t-a}^t e^{-lambda(t-u)} dL_u with a centered
/// unit-variance driver; s <= t.
double compact_cov(double lambda, double a, double t, double s);

/// C_H = 2^{2H-1} - 1 for H in (0, 1].
double hurst_constant(double h_exp);
/// Inverse of hurst_constant: H = (1 + log2(1 + rho1)) / 2, rho1 in (-1/2, 1].
double effective_hurst(double rho1);

}  // namespace wbou
