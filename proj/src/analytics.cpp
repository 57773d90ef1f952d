#include "wbou/analytics.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <string>

#include "wbou/error.hpp"

namespace wbou {

namespace {

void check_lag(double h) {
    if (!(h >= 0.0)) throw NegativeLag("lag must be >= 0 (got " + std::to_string(h) + ")");
}

void check_k(int k) {
    if (k < 1) throw BadLag("increment lag k must be >= 1 (got " + std::to_string(k) + ")");
}

// 1 - (1 + x) e^{-x}
double one_minus_poly_exp(double x) { return -std::expm1(-x) - x * std::exp(-x); }

}  // namespace

void SecondOrderParams::validate() const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidLambda("lambda must be > 0");
    if (!std::isfinite(mu)) throw DomainError("mu must be finite");
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("V must be > 0");
}

SecondOrderParams SecondOrderParams::from_driver(const Driver& driver, double lambda) {
    const Moments m = moments(driver);
    SecondOrderParams p{lambda, m.mu, m.v};
    p.validate();
    return p;
}

double mean_x(const SecondOrderParams& p) { return 2.0 * p.mu / p.lambda; }

double var_x(const SecondOrderParams& p) { return p.v / p.lambda; }

double acov_x(const SecondOrderParams& p, double h) {
    check_lag(h);
    return p.v * (h + 1.0 / p.lambda) * std::exp(-p.lambda * h);
}

double acf_x(const SecondOrderParams& p, double h) {
    check_lag(h);
    const double lh = p.lambda * h;
    return (1.0 + lh) * std::exp(-lh);
}

double acf_ou(const SecondOrderParams& p, double h) {
    check_lag(h);
    return std::exp(-p.lambda * h);
}

double msd(const SecondOrderParams& p, double h) {
    check_lag(h);
    return 2.0 * p.v / p.lambda * one_minus_poly_exp(p.lambda * h);
}

double increment_acf(const SecondOrderParams& p, int k) {
    check_k(k);
    // With c(h) = (h + 1/lambda) e^{-lambda h}:
    //   2c(k) - c(k+1) - c(k-1) = e^{-lambda k} ((k + 1/lambda)(2 - 2 cosh lambda) + 2 sinh lambda)
    //   2(c(0) - c(1))          = (2/lambda)(1 - (1 + lambda) e^{-lambda})
    const double l = p.lambda;
    const double kk = static_cast<double>(k);
    const double sh = std::sinh(0.5 * l);
    const double num = std::exp(-l * kk) * (-(kk + 1.0 / l) * 4.0 * sh * sh + 2.0 * std::sinh(l));
    const double den = 2.0 / l * one_minus_poly_exp(l);
    return num / den;
}

double increment_acf_printed(const SecondOrderParams& p, int k) {
    check_k(k);
    const double l = p.lambda;
    const double kk = static_cast<double>(k);
    const double e = std::exp(l), em = std::exp(-l);
    const double den = 1.0 - em - l * em;
    const double first = 0.5 + 0.5 * (1.0 - e + l * e) / den;
    const double second = 0.5 + 0.5 * (1.0 - e + l * em) / den;
    return std::exp(-l * kk) * first + l * kk * std::exp(-l * kk) * second;
}

double first_order_increment_acf_printed(const SecondOrderParams& p) {
    const double l = p.lambda;
    const double e = std::exp(l), em = std::exp(-l);
    const double den = 1.0 - em - l * em;
    return em * (0.5 * (1.0 + l) + 0.5 * (1.0 + l - e + l * l * em) / den);
}

double increment_acf_ou(const SecondOrderParams& p, int k) {
    check_k(k);
    const double l = p.lambda;
    return std::exp(-l * static_cast<double>(k)) * (0.5 + 0.5 * std::expm1(l) / std::expm1(-l));
}

double lambda_sign_threshold() {
    auto f = [](double l) { return increment_acf({l, 0.0, 1.0}, 1); };
    auto close_enough = [](double a, double b) { return std::abs(b - a) <= 1e-8; };
    const auto [lo, hi] = boost::math::tools::bisect(f, 0.5, 3.0, close_enough);
    return 0.5 * (lo + hi);
}

double mean_y(const SecondOrderParams&, double t) {
    check_lag(t);
    return 0.0;
}

double var_y(const SecondOrderParams& p, double t) { return msd(p, t); }

double var_y_printed(const SecondOrderParams& p, double t) {
    check_lag(t);
    return p.v * t * std::exp(-p.lambda * t) + p.v / p.lambda * std::exp(-p.lambda * t);
}

double compact_cov(double lambda, double a, double t, double s) {
    if (!(lambda > 0.0)) throw InvalidLambda("lambda must be > 0");
    if (!(a > 0.0)) throw DomainError("compact kernel window a must be > 0");
    const double d = std::abs(t - s);
    if (d > a) return 0.0;
    return (std::exp(-lambda * d) - std::exp(-lambda * (2.0 * a - d))) / (2.0 * lambda);
}

double hurst_constant(double h_exp) {
    if (!(h_exp > 0.0 && h_exp <= 1.0)) throw DomainError("Hurst exponent must lie in (0, 1]");
    return std::exp2(2.0 * h_exp - 1.0) - 1.0;
}

double effective_hurst(double rho1) {
    if (!(rho1 > -0.5 && rho1 <= 1.0)) throw DomainError("rho1 must lie in (-0.5, 1]");
    return 0.5 * (1.0 + std::log2(1.0 + rho1));
}

}  // namespace wbou
