#include "wbou/levy_driver.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

#include "wbou/error.hpp"

namespace wbou {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

// P(Z >= z) for standard normal Z.
double normal_upper(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }

// int_{(lo, hi]} f(x) g(x) dx for a density g vanishing below support_lo.
double integrate_density(const std::function<double(double)>& g, const quad::Integrand& f,
                         double lo, double hi, double support_lo) {
    lo = std::max(lo, support_lo);
    if (!(lo < hi)) return 0.0;
    auto fg = [&](double x) {
        const double gx = g(x);
        return gx == 0.0 ? 0.0 : f(x) * gx;
    };
    if (std::isinf(lo) && std::isinf(hi)) {
        return quad::half_line(fg, 0.0) + quad::half_line([&](double x) { return fg(-x); }, 0.0);
    }
    if (std::isinf(hi)) return quad::half_line(fg, lo);
    if (std::isinf(lo)) return quad::half_line([&](double x) { return fg(-x); }, -hi);
    return quad::singular(fg, lo, hi);
}

class ZeroMeasure final : public LevyMeasure {
public:
    double tail_above(double) const override { return 0.0; }
    double tail_below(double) const override { return 0.0; }
    std::optional<double> density(double) const override { return 0.0; }
    double integrate(const quad::Integrand&, double, double) const override { return 0.0; }
    double large_jump_mean() const override { return 0.0; }
    double second_moment() const override { return 0.0; }
};

// nu(dx) = a exp(-b x) / x dx on x > 0.
class GammaMeasure final : public LevyMeasure {
public:
    GammaMeasure(double a, double b) : a_(a), b_(b) {}

    double tail_above(double y) const override { return a_ * boost::math::expint(1, b_ * y); }
    double tail_below(double) const override { return 0.0; }
    std::optional<double> density(double x) const override {
        return x > 0.0 ? a_ * std::exp(-b_ * x) / x : 0.0;
    }
    double integrate(const quad::Integrand& f, double lo, double hi) const override {
        return integrate_density([this](double x) { return *density(x); }, f, lo, hi, 0.0);
    }
    double large_jump_mean() const override { return a_ * std::exp(-b_) / b_; }
    double second_moment() const override { return a_ / (b_ * b_); }

private:
    double a_, b_;
};

// nu = intensity * (jump law), with any mass at the origin discarded.
class CompoundPoissonMeasure final : public LevyMeasure {
public:
    CompoundPoissonMeasure(double eta, JumpLaw jumps) : eta_(eta), jumps_(jumps) {}

    double tail_above(double y) const override {
        return eta_ * std::visit(Overloaded{
                                     [&](const NormalJumps& j) {
                                         return normal_upper((y - j.mean) / std::sqrt(j.variance));
                                     },
                                     [&](const ExponentialJumps& j) { return std::exp(-j.rate * y); },
                                     [&](const PointMassJumps& j) { return j.location >= y ? 1.0 : 0.0; },
                                 },
                                 jumps_);
    }
    double tail_below(double y) const override {
        return eta_ * std::visit(Overloaded{
                                     [&](const NormalJumps& j) {
                                         return normal_upper((y + j.mean) / std::sqrt(j.variance));
                                     },
                                     [&](const ExponentialJumps&) { return 0.0; },
                                     [&](const PointMassJumps& j) { return j.location <= -y ? 1.0 : 0.0; },
                                 },
                                 jumps_);
    }
    std::optional<double> density(double x) const override {
        return std::visit(Overloaded{
                              [&](const NormalJumps& j) -> std::optional<double> {
                                  const double s = std::sqrt(j.variance);
                                  return eta_ * normal_pdf((x - j.mean) / s) / s;
                              },
                              [&](const ExponentialJumps& j) -> std::optional<double> {
                                  return x > 0.0 ? eta_ * j.rate * std::exp(-j.rate * x) : 0.0;
                              },
                              [&](const PointMassJumps&) -> std::optional<double> {
                                  return std::nullopt;
                              },
                          },
                          jumps_);
    }
    std::vector<Atom> atoms() const override {
        if (const auto* p = std::get_if<PointMassJumps>(&jumps_)) {
            if (p->location != 0.0 && eta_ > 0.0) return {Atom{p->location, eta_}};
        }
        return {};
    }
    double integrate(const quad::Integrand& f, double lo, double hi) const override {
        if (eta_ == 0.0) return 0.0;
        if (const auto* p = std::get_if<PointMassJumps>(&jumps_)) {
            const double c = p->location;
            return (c != 0.0 && c > lo && c <= hi) ? eta_ * f(c) : 0.0;
        }
        const double support_lo = std::holds_alternative<ExponentialJumps>(jumps_) ? 0.0 : -kInf;
        return integrate_density([this](double x) { return *density(x); }, f, lo, hi, support_lo);
    }
    double large_jump_mean() const override {
        return eta_ * std::visit(Overloaded{
                                     [](const NormalJumps& j) {
                                         const double m = j.mean, s = std::sqrt(j.variance);
                                         const double z1 = (1.0 - m) / s, z2 = (-1.0 - m) / s;
                                         const double upper = m * normal_upper(z1) + s * normal_pdf(z1);
                                         const double lower =
                                             m * normal_upper(-z2) - s * normal_pdf(z2);
                                         return upper + lower;
                                     },
                                     [](const ExponentialJumps& j) {
                                         return std::exp(-j.rate) * (1.0 + 1.0 / j.rate);
                                     },
                                     [](const PointMassJumps& j) {
                                         return std::abs(j.location) > 1.0 ? j.location : 0.0;
                                     },
                                 },
                                 jumps_);
    }
    double second_moment() const override { return eta_ * jump_second_moment(); }

    double jump_mean() const {
        return std::visit(Overloaded{
                              [](const NormalJumps& j) { return j.mean; },
                              [](const ExponentialJumps& j) { return 1.0 / j.rate; },
                              [](const PointMassJumps& j) { return j.location; },
                          },
                          jumps_);
    }
    double jump_second_moment() const {
        return std::visit(Overloaded{
                              [](const NormalJumps& j) { return j.mean * j.mean + j.variance; },
                              [](const ExponentialJumps& j) { return 2.0 / (j.rate * j.rate); },
                              [](const PointMassJumps& j) { return j.location * j.location; },
                          },
                          jumps_);
    }

private:
    double eta_;
    JumpLaw jumps_;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidDriver(what);
}

bool finite(double x) { return std::isfinite(x); }

std::string format_number(double x) {
    char buf[32];
    return std::string(buf, std::to_chars(buf, buf + sizeof buf, x).ptr);
}

}  // namespace

Driver::Driver(DriverFamily family) : family_(std::move(family)) {
    std::visit(Overloaded{
                   [&](const BrownianFamily& f) {
                       triplet_ = {f.gamma, f.sigma2, std::make_shared<ZeroMeasure>()};
                   },
                   [&](const DriftFamily& f) {
                       triplet_ = {f.gamma, 0.0, std::make_shared<ZeroMeasure>()};
                   },
                   [&](const GammaFamily& f) {
                       // gamma = int_0^1 x nu(dx) = a (1 - e^{-b}) / b
                       triplet_ = {-f.shape * std::expm1(-f.rate) / f.rate, 0.0,
                                   std::make_shared<GammaMeasure>(f.shape, f.rate)};
                   },
                   [&](const CompoundPoissonFamily& f) {
                       auto m = std::make_shared<CompoundPoissonMeasure>(f.intensity, f.jumps);
                       const double small_jump_mean =
                           f.intensity * m->jump_mean() - m->large_jump_mean();
                       triplet_ = {small_jump_mean, 0.0, std::move(m)};
                   },
               },
               family_);
}

Driver Driver::brownian(double gamma, double sigma2) {
    require(finite(gamma) && finite(sigma2), "brownian: parameters must be finite");
    require(sigma2 >= 0.0, "brownian: sigma2 must be >= 0");
    return Driver(BrownianFamily{gamma, sigma2});
}

Driver Driver::compound_poisson(double intensity, JumpLaw jumps) {
    require(finite(intensity) && intensity >= 0.0,
            "compound_poisson: intensity must be finite and >= 0");
    std::visit(Overloaded{
                   [](const NormalJumps& j) {
                       require(finite(j.mean) && finite(j.variance) && j.variance > 0.0,
                               "compound_poisson: normal jumps need finite mean and variance > 0");
                   },
                   [](const ExponentialJumps& j) {
                       require(finite(j.rate) && j.rate > 0.0,
                               "compound_poisson: exponential jump rate must be > 0");
                   },
                   [](const PointMassJumps& j) {
                       require(finite(j.location), "compound_poisson: point mass must be finite");
                   },
               },
               jumps);
    return Driver(CompoundPoissonFamily{intensity, jumps});
}

Driver Driver::gamma_subordinator(double shape, double rate) {
    require(finite(shape) && finite(rate) && shape > 0.0 && rate > 0.0,
            "gamma: shape a and rate b must be > 0");
    return Driver(GammaFamily{shape, rate});
}

Driver Driver::deterministic_drift(double gamma) {
    require(finite(gamma), "drift: gamma must be finite");
    return Driver(DriftFamily{gamma});
}

std::string_view Driver::family_name() const {
    return std::visit(Overloaded{
                          [](const BrownianFamily&) { return std::string_view{"brownian"}; },
                          [](const CompoundPoissonFamily&) { return std::string_view{"cpoisson"}; },
                          [](const GammaFamily&) { return std::string_view{"gamma"}; },
                          [](const DriftFamily&) { return std::string_view{"drift"}; },
                      },
                      family_);
}

bool Driver::nonnegative() const {
    return std::visit(Overloaded{
                          [](const BrownianFamily& f) { return f.sigma2 == 0.0 && f.gamma >= 0.0; },
                          [](const DriftFamily& f) { return f.gamma >= 0.0; },
                          [](const GammaFamily&) { return true; },
                          [](const CompoundPoissonFamily& f) {
                              return std::visit(
                                  Overloaded{
                                      [](const NormalJumps&) { return false; },
                                      [](const ExponentialJumps&) { return true; },
                                      [](const PointMassJumps& j) { return j.location >= 0.0; },
                                  },
                                  f.jumps);
                          },
                      },
                      family_);
}

std::string Driver::describe() const {
    auto n = format_number;
    return std::visit(
        Overloaded{
            [&](const BrownianFamily& f) {
                return "brownian:gamma=" + n(f.gamma) + ",sigma2=" + n(f.sigma2);
            },
            [&](const DriftFamily& f) { return "drift:gamma=" + n(f.gamma); },
            [&](const GammaFamily& f) { return "gamma:a=" + n(f.shape) + ",b=" + n(f.rate); },
            [&](const CompoundPoissonFamily& f) {
                const std::string head = "cpoisson:eta=" + n(f.intensity) + ",jump=";
                return head + std::visit(Overloaded{
                                             [&](const NormalJumps& j) {
                                                 return "normal,m=" + n(j.mean) + ",s2=" + n(j.variance);
                                             },
                                             [&](const ExponentialJumps& j) {
                                                 return "exp,rate=" + n(j.rate);
                                             },
                                             [&](const PointMassJumps& j) {
                                                 return "point,c=" + n(j.location);
                                             },
                                         },
                                         f.jumps);
            },
        },
        family_);
}

std::complex<double> psi(const Driver& driver, double u) {
    using namespace std::complex_literals;
    return std::visit(
        Overloaded{
            [&](const BrownianFamily& f) -> std::complex<double> {
                return 1i * u * f.gamma - 0.5 * f.sigma2 * u * u;
            },
            [&](const DriftFamily& f) -> std::complex<double> { return 1i * u * f.gamma; },
            [&](const GammaFamily& f) -> std::complex<double> {
                return -f.shape * std::log(1.0 - 1i * u / f.rate);
            },
            [&](const CompoundPoissonFamily& f) -> std::complex<double> {
                const std::complex<double> cf_minus_one = std::visit(
                    Overloaded{
                        [&](const NormalJumps& j) -> std::complex<double> {
                            return std::exp(1i * u * j.mean - 0.5 * j.variance * u * u) - 1.0;
                        },
                        [&](const ExponentialJumps& j) -> std::complex<double> {
                            return 1i * u / (j.rate - 1i * u);
                        },
                        [&](const PointMassJumps& j) -> std::complex<double> {
                            const double half = std::sin(0.5 * u * j.location);
                            return {-2.0 * half * half, std::sin(u * j.location)};
                        },
                    },
                    f.jumps);
                return f.intensity * cf_minus_one;
            },
        },
        driver.family());
}

double cumulant_k(const Driver& driver, double theta) {
    if (!driver.nonnegative()) {
        throw NotASubordinator("cumulant_k: driver " + driver.describe() +
                               " has a Gaussian part or negative jumps");
    }
    if (!(theta >= 0.0)) throw DomainError("cumulant_k: theta must be >= 0");
    return std::visit(Overloaded{
                          [&](const BrownianFamily& f) { return -f.gamma * theta; },
                          [&](const DriftFamily& f) { return -f.gamma * theta; },
                          [&](const GammaFamily& f) { return -f.shape * std::log1p(theta / f.rate); },
                          [&](const CompoundPoissonFamily& f) {
                              return f.intensity *
                                     std::visit(Overloaded{
                                                    [&](const ExponentialJumps& j) {
                                                        return -theta / (j.rate + theta);
                                                    },
                                                    [&](const PointMassJumps& j) {
                                                        return std::expm1(-theta * j.location);
                                                    },
                                                    [](const NormalJumps&) { return 0.0; },
                                                },
                                                f.jumps);
                          },
                      },
                      driver.family());
}

Moments moments(const Driver& driver) {
    return std::visit(Overloaded{
                          [](const BrownianFamily& f) { return Moments{f.gamma, f.sigma2}; },
                          [](const DriftFamily& f) { return Moments{f.gamma, 0.0}; },
                          [](const GammaFamily& f) {
                              return Moments{f.shape / f.rate, f.shape / (f.rate * f.rate)};
                          },
                          [&](const CompoundPoissonFamily& f) {
                              const auto& m =
                                  static_cast<const CompoundPoissonMeasure&>(*driver.triplet().measure);
                              return Moments{f.intensity * m.jump_mean(),
                                             f.intensity * m.jump_second_moment()};
                          },
                      },
                      driver.family());
}

bool log_moment_finite(const Driver&) { return true; }

double sample_increment(const Driver& driver, double dt, Stream& stream) {
    return std::visit(
        Overloaded{
            [&](const BrownianFamily& f) {
                return f.gamma * dt + std::sqrt(f.sigma2 * dt) * stream.normal();
            },
            [&](const DriftFamily& f) { return f.gamma * dt; },
            [&](const GammaFamily& f) { return stream.gamma(f.shape * dt, f.rate); },
            [&](const CompoundPoissonFamily& f) {
                const std::uint64_t jumps = stream.poisson(f.intensity * dt);
                if (jumps == 0) return 0.0;
                const double count = static_cast<double>(jumps);
                // Sums of i.i.d. jumps drawn in one shot from their closed-form law.
                return std::visit(Overloaded{
                                      [&](const NormalJumps& j) {
                                          return count * j.mean +
                                                 std::sqrt(count * j.variance) * stream.normal();
                                      },
                                      [&](const ExponentialJumps& j) {
                                          return stream.gamma(count, j.rate);
                                      },
                                      [&](const PointMassJumps& j) { return count * j.location; },
                                  },
                                  f.jumps);
            },
        },
        driver.family());
}

void sample_increments(const Driver& driver, double dt, Stream& stream, std::span<double> out) {
    if (const auto* g = std::get_if<GammaFamily>(&driver.family())) {
        for (double& v : out) v = stream.gamma(g->shape * dt, g->rate);
        return;
    }
    for (double& v : out) v = sample_increment(driver, dt, stream);
}

}  // namespace wbou
