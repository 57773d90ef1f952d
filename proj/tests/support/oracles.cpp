#include "oracles.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

namespace oracle {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

double gk(const Fn& f, double a, double b, double tol) {
    if (!(a < b)) return 0.0;
    const double w = b - a;
    return w * GK::integrate([&](double s) { return f(a + w * s); }, 0.0, 1.0, 15, tol);
}

// int over [lo, hi] of f(x) nu(dx), density part plus atoms inside (lo, hi]
// (atoms accepted by `keep`).
double integrate_nu(const wbou::LevyMeasure& nu, const Fn& f, double lo, double hi,
                    const std::function<bool(double)>& keep) {
    double total = 0.0;
    for (const auto& atom : nu.atoms()) {
        if (keep(atom.location)) total += atom.mass * f(atom.location);
    }
    if (!nu.density(1.0).has_value()) return total;
    auto g = [&](double x) {
        const double d = nu.density(x).value_or(0.0);
        return d == 0.0 ? 0.0 : f(x) * d;
    };
    const double pts[] = {-1.0, 0.0, 1.0};
    return total + integrate(g, lo, hi, pts);
}

}  // namespace

double integrate(const Fn& f, double a, double b, std::span<const double> breaks, double tol) {
    std::vector<double> pts{a};
    for (double p : breaks) {
        if (p > a && p < b) pts.push_back(p);
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += gk(f, pts[i], pts[i + 1], tol);
    return total;
}

double measure_cutoff(const wbou::LevyMeasure& nu) {
    double y = 1.0;
    while (y < 1e8 && nu.tail_above(y) + nu.tail_below(y) > 1e-20) y *= 1.5;
    return y;
}

std::complex<double> lk_psi(const wbou::LevyTriplet& t, double u) {
    const auto& nu = *t.measure;
    const double cut = measure_cutoff(nu);
    auto all = [](double) { return true; };
    const double re = integrate_nu(nu, [u](double x) { return std::cos(u * x) - 1.0; }, -cut, cut, all);
    const double im = integrate_nu(
        nu, [u](double x) { return std::sin(u * x) - (std::abs(x) <= 1.0 ? u * x : 0.0); }, -cut, cut, all);
    return {-0.5 * t.sigma2 * u * u + re, u * t.gamma + im};
}

double gamma_f_quadrature(const wbou::Driver& driver, double lambda) {
    const auto& trip = driver.triplet();
    const auto& nu = *trip.measure;
    const double cut = measure_cutoff(nu);
    auto inner = [&](double v) {
        const double reach = std::min(1.0 / v, cut);
        auto keep = [v](double x) { return std::abs(x) > 1.0 && std::abs(x) <= 1.0 / v; };
        double total = 0.0;
        for (const auto& atom : nu.atoms()) {
            if (keep(atom.location)) total += atom.mass * atom.location;
        }
        if (nu.density(1.0).has_value() && reach > 1.0) {
            auto g = [&](double x) { return x * nu.density(x).value_or(0.0); };
            total += gk(g, 1.0, reach, 1e-13) + gk(g, -reach, -1.0, 1e-13);
        }
        return trip.gamma + total;
    };
    std::vector<double> breaks{1.0 / cut};
    for (const auto& atom : nu.atoms()) {
        if (std::abs(atom.location) > 1.0) breaks.push_back(1.0 / std::abs(atom.location));
    }
    return 2.0 / lambda * integrate(inner, 0.0, 1.0, breaks, 1e-13);
}

namespace {

double pushforward_tail(const std::function<double(double)>& tail, const wbou::LevyMeasure& nu,
                        double lambda, double y, bool upper) {
    const double cut = measure_cutoff(nu);
    if (cut <= y) return 0.0;
    const double s_max = std::log(cut / y) / lambda;
    std::vector<double> breaks;
    for (const auto& atom : nu.atoms()) {
        const double c = upper ? atom.location : -atom.location;
        if (c > y) breaks.push_back(std::log(c / y) / lambda);
    }
    return 2.0 * integrate([&](double s) { return tail(y * std::exp(lambda * s)); }, 0.0, s_max, breaks);
}

}  // namespace

double pushforward_tail_above(const wbou::LevyMeasure& nu, double lambda, double y) {
    return pushforward_tail([&](double w) { return nu.tail_above(w); }, nu, lambda, y, true);
}

double pushforward_tail_below(const wbou::LevyMeasure& nu, double lambda, double y) {
    return pushforward_tail([&](double w) { return nu.tail_below(w); }, nu, lambda, y, false);
}

std::complex<double> lk_cf_from_law(const wbou::MarginalLaw& law, std::span<const double> breaks,
                                    double u) {
    double cut = 1.0;
    while (cut < 1e8 && law.tail_above(cut) + law.tail_below(cut) > 1e-20) cut *= 1.5;
    std::vector<double> pts{-1.0, 0.0, 1.0};
    for (double b : breaks) {
        pts.push_back(std::abs(b));
        pts.push_back(-std::abs(b));
    }
    auto g = [&](double y) { return law.density(y); };
    const double re = integrate([&](double y) { return (std::cos(u * y) - 1.0) * g(y); }, -cut, cut, pts);
    const double im = integrate(
        [&](double y) { return (std::sin(u * y) - (std::abs(y) <= 1.0 ? u * y : 0.0)) * g(y); }, -cut, cut,
        pts);
    const auto& t = law.triplet;
    return std::exp(std::complex<double>(-0.5 * t.sigma2 * u * u + re, u * t.gamma + im));
}

std::vector<double> chebyshev_derivatives_at_zero(const Fn& f, double h, int nodes, int max_order) {
    const int n = nodes;
    std::vector<double> fx(n);
    for (int j = 0; j < n; ++j) {
        const double x = std::cos(std::numbers::pi * (j + 0.5) / n);
        fx[j] = f(0.5 * h * (x + 1.0));
    }
    std::vector<double> c(n);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += fx[j] * std::cos(std::numbers::pi * k * (j + 0.5) / n);
        c[k] = 2.0 * s / n;
    }
    c[0] *= 0.5;

    std::vector<double> out(max_order + 1, 0.0);
    for (int order = 0; order <= max_order; ++order) {
        double d = 0.0;
        for (int k = 0; k < n; ++k) {
            // T_k^(order)(-1) = (-1)^(k+order) prod_{m<order} (k^2 - m^2) / (2m + 1)
            double t = ((k + order) % 2 == 0) ? 1.0 : -1.0;
            for (int m = 0; m < order; ++m) t *= static_cast<double>(k * k - m * m) / (2 * m + 1);
            d += c[k] * t;
        }
        out[order] = d * std::pow(2.0 / h, order);
    }
    return out;
}

double rbar_nested(double lambda, double t) {
    auto r = [lambda](double v) { return (1.0 + lambda * v) * std::exp(-lambda * v); };
    auto inner = [&](double u) { return gk(r, 0.0, u, 1e-13); };
    return gk(inner, 0.0, t, 1e-13);
}

Eigen::Matrix2d expm_series(const Eigen::Matrix2d& a, double t, int terms) {
    Eigen::Matrix2d sum = Eigen::Matrix2d::Identity();
    Eigen::Matrix2d term = Eigen::Matrix2d::Identity();
    for (int n = 1; n < terms; ++n) {
        term = term * a * t / static_cast<double>(n);
        sum += term;
    }
    return sum;
}

GridMin grid_minimum(const Fn& f, double lo, double hi, int points) {
    GridMin best{lo, f(lo)};
    for (int i = 1; i < points; ++i) {
        const double x = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1));
        const double v = f(x);
        if (v < best.value) best = {x, v};
    }
    return best;
}

bool Estimate::within(double target, double k) const { return std::abs(value - target) <= k * se; }

namespace {

double mean_of(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

}  // namespace

Estimate sample_mean(std::span<const double> x) {
    const double m = mean_of(x);
    double ss = 0.0;
    for (double v : x) ss += (v - m) * (v - m);
    const double n = static_cast<double>(x.size());
    return {m, std::sqrt(ss / (n - 1.0) / n)};
}

Estimate sample_variance(std::span<const double> x) {
    const double m = mean_of(x);
    const double n = static_cast<double>(x.size());
    double m2 = 0.0, m4 = 0.0;
    for (double v : x) {
        const double d = (v - m) * (v - m);
        m2 += d;
        m4 += d * d;
    }
    m2 /= n;
    m4 /= n;
    return {m2 * n / (n - 1.0), std::sqrt(std::max(m4 - m2 * m2, 0.0) / n)};
}

Estimate sample_correlation(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    const double mx = mean_of(x), my = mean_of(y);
    double sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    const double sx = std::sqrt(sxx / n), sy = std::sqrt(syy / n);
    double r = 0.0;
    std::vector<double> zx(x.size()), zy(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        zx[i] = (x[i] - mx) / sx;
        zy[i] = (y[i] - my) / sy;
        r += zx[i] * zy[i];
    }
    r /= n;
    std::vector<double> psi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) psi[i] = zx[i] * zy[i] - 0.5 * r * (zx[i] * zx[i] + zy[i] * zy[i]);
    return {r, sample_mean(psi).se};
}

std::complex<double> empirical_cf(std::span<const double> x, double u) {
    double re = 0.0, im = 0.0;
    for (double v : x) {
        re += std::cos(u * v);
        im += std::sin(u * v);
    }
    const double n = static_cast<double>(x.size());
    return {re / n, im / n};
}

}  // namespace oracle
