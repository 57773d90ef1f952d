#include "wbou/law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "wbou/error.hpp"
#include "wbou/quadrature.hpp"

namespace wbou {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Image of nu x Leb under (x, s) -> x e^{-lambda|s|}, scaled by c = 2/lambda
// (or 2 under the scaled clock). Uses
//   int F(y) nu_X(dy) = c int nu(dx) int_0^1 F(xv) / v dv.
class PushforwardMeasure final : public LevyMeasure {
public:
    PushforwardMeasure(std::shared_ptr<const LevyMeasure> base, double c)
        : base_(std::move(base)), c_(c) {
        for (const Atom& a : base_->atoms()) breaks_.push_back(std::abs(a.location));
        std::sort(breaks_.begin(), breaks_.end());
    }

    double tail_above(double y) const override {
        return c_ * base_->integrate([y](double x) { return std::log(x / y); }, y, kInf);
    }
    double tail_below(double y) const override {
        return c_ * base_->integrate([y](double x) { return std::log(-x / y); }, -kInf, -y);
    }
    std::optional<double> density(double y) const override {
        if (y == 0.0) return 0.0;
        const double a = std::abs(y);
        return c_ * (y > 0.0 ? base_->tail_above(a) : base_->tail_below(a)) / a;
    }
    double integrate(const quad::Integrand& f, double lo, double hi) const override {
        auto g = [&](double y) {
            const double d = *density(y);
            return d == 0.0 ? 0.0 : f(y) * d;
        };
        double total = 0.0;
        if (hi > 0.0) total += half_axis(g, std::max(lo, 0.0), hi);
        if (lo < 0.0) {
            total += half_axis([&](double y) { return g(-y); }, std::max(-hi, 0.0), -lo);
        }
        return total;
    }
    double large_jump_mean() const override {
        // int_0^1 x 1{|xv| > 1} dv = x - sign(x) for |x| > 1
        const double beyond = base_->integrate([](double) { return 1.0; }, 1.0, kInf) -
                              base_->integrate([](double) { return 1.0; }, -kInf, -1.0);
        return c_ * (base_->large_jump_mean() - beyond);
    }
    double second_moment() const override { return 0.5 * c_ * base_->second_moment(); }

private:
    // int_{(a, b]} g over a subset of [0, inf), split at |atoms| where the
    // density jumps.
    double half_axis(const quad::Integrand& g, double a, double b) const {
        if (!(a < b)) return 0.0;
        std::vector<double> pts{a};
        for (double p : breaks_) {
            if (p > a && p < b) pts.push_back(p);
        }
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            total += quad::singular(g, pts[i], pts[i + 1]);
        }
        total += std::isinf(b) ? quad::half_line(g, pts.back()) : quad::singular(g, pts.back(), b);
        return total;
    }

    std::shared_ptr<const LevyMeasure> base_;
    double c_;
    std::vector<double> breaks_;
};

double atom_mass_at(const LevyMeasure& m, double x) {
    double mass = 0.0;
    for (const Atom& a : m.atoms()) {
        if (a.location == x) mass += a.mass;
    }
    return mass;
}

void require_existence(const Driver& driver, double lambda) {
    const auto check = existence_check(driver, lambda);
    if (!check) throw ExistenceViolation(check.reason);
}

// 2 int_0^T psi(u e^{-lambda s}) ds in the variable v = e^{-lambda s}, as
// int_{tol}^1 psi(uv)/v dv times 2/lambda (times 2 under the scaled clock).
std::complex<double> exponent_x(const Driver& driver, double lambda, double u, TimeScale clock,
                                const TruncationPolicy& trunc) {
    if (u == 0.0) return 0.0;
    const double scale = clock == TimeScale::scaled ? 2.0 : 2.0 / lambda;
    auto re = [&](double v) { return psi(driver, u * v).real() / v; };
    auto im = [&](double v) { return psi(driver, u * v).imag() / v; };
    return scale * std::complex<double>(quad::finite(re, trunc.tol, 1.0),
                                        quad::finite(im, trunc.tol, 1.0));
}

}  // namespace

ExistenceResult existence_check(const Driver& driver, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        return {false, "lambda: X exists only for lambda > 0 (got " + std::to_string(lambda) + ")"};
    }
    if (!log_moment_finite(driver)) {
        return {false, "log-moment: int log|x| 1{|x|>1} nu(dx) is infinite for " + driver.describe()};
    }
    return {};
}

MarginalLaw triplet_of_x(const Driver& driver, double lambda, TimeScale clock) {
    require_existence(driver, lambda);
    const LevyTriplet& base = driver.triplet();
    const auto& nu = *base.measure;
    const double c = clock == TimeScale::scaled ? 2.0 : 2.0 / lambda;

    // nu((1, inf)) - nu((-inf, -1)); the tails are closed, so drop atoms at +-1.
    const double above = nu.tail_above(1.0) - atom_mass_at(nu, 1.0);
    const double below = nu.tail_below(1.0) - atom_mass_at(nu, -1.0);

    MarginalLaw law;
    law.lambda = lambda;
    law.clock = clock;
    law.triplet.gamma = c * (base.gamma + above - below);
    law.triplet.sigma2 = clock == TimeScale::scaled ? base.sigma2 : base.sigma2 / lambda;
    law.triplet.measure = std::make_shared<PushforwardMeasure>(base.measure, c);
    return law;
}

std::complex<double> char_fn_x(const Driver& driver, double lambda, double u, TimeScale clock,
                               const TruncationPolicy& trunc) {
    require_existence(driver, lambda);
    trunc.validate();
    return std::exp(exponent_x(driver, lambda, u, clock, trunc));
}

std::complex<double> char_fn_joint(const Driver& driver, double lambda,
                                   std::span<const double> times, std::span<const double> us,
                                   TimeScale clock, const TruncationPolicy& trunc) {
    require_existence(driver, lambda);
    trunc.validate();
    if (times.size() != us.size()) {
        throw DimensionMismatch("char_fn_joint: times and us differ in length");
    }
    if (times.empty()) return 1.0;
    for (std::size_t j = 1; j < times.size(); ++j) {
        if (!(times[j] > times[j - 1])) {
            throw DomainError("char_fn_joint: times must be strictly increasing");
        }
    }
    if (std::all_of(us.begin(), us.end(), [](double u) { return u == 0.0; })) return 1.0;

    auto arg = [&](double s) {
        double a = 0.0;
        for (std::size_t j = 0; j < times.size(); ++j) a += us[j] * std::exp(-lambda * std::abs(times[j] - s));
        return a;
    };
    const double horizon = trunc.horizon(lambda);
    const double lo = times.front() - horizon, hi = times.back() + horizon;
    auto re = [&](double s) { return psi(driver, arg(s)).real(); };
    auto im = [&](double s) { return psi(driver, arg(s)).imag(); };
    const double weight = clock == TimeScale::scaled ? lambda : 1.0;
    const std::complex<double> expo(quad::finite_with_breaks(re, lo, hi, times),
                                    quad::finite_with_breaks(im, lo, hi, times));
    return std::exp(weight * expo);
}

double kbar(const Driver& driver, double theta) {
    if (!driver.nonnegative()) {
        throw NotASubordinator("kbar: driver " + driver.describe() + " is not a subordinator");
    }
    if (!(theta >= 0.0)) throw DomainError("kbar: theta must be >= 0");
    if (theta == 0.0) return 0.0;
    // k(v)/v -> k'(0) = -mu as v -> 0; GK nodes never touch the endpoint.
    const double mu = moments(driver).mu;
    auto f = [&](double v) { return v == 0.0 ? -mu : cumulant_k(driver, v) / v; };
    return 2.0 * quad::finite(f, 0.0, theta);
}

double gbar_from_g(const DensityFn& g, double y) {
    if (!(y > 0.0)) throw DomainError("gbar_from_g: y must be > 0");
    return 2.0 / y * quad::half_line(g, y);
}

double g_from_gbar(const DensityFn& gbar, const DensityFn& gbar_prime, double y) {
    if (!(y > 0.0)) throw DomainError("g_from_gbar: y must be > 0");
    return 0.5 * (-gbar(y) - y * gbar_prime(y));
}

}  // namespace wbou
