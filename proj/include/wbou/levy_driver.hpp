#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wbou/quadrature.hpp"
#include "wbou/random.hpp"

namespace wbou {

// Jump-size laws of the compound Poisson family.
struct NormalJumps {
    double mean;
    double variance;  // > 0
};
struct ExponentialJumps {
    double rate;
};
struct PointMassJumps {
    double location;
};
using JumpLaw = std::variant<NormalJumps, ExponentialJumps, PointMassJumps>;

struct BrownianFamily {
    double gamma;
    double sigma2;
};
struct CompoundPoissonFamily {
    double intensity;
    JumpLaw jumps;
};
struct GammaFamily {
    double shape;
    double rate;
};
struct DriftFamily {
    double gamma;
};
using DriverFamily = std::variant<BrownianFamily, CompoundPoissonFamily, GammaFamily, DriftFamily>;

struct Atom {
    double location;
    double mass;
};

/// Read-only view of a Lévy measure nu.
///
/// Tails are closed half-lines: tail_above(y) = nu([y, inf)),
/// tail_below(y) = nu((-inf, -y]), both for y > 0. integrate() covers the
/// half-open interval (lo, hi] and accepts infinite bounds.
class LevyMeasure {
public:
    virtual ~LevyMeasure() = default;

    virtual double tail_above(double y) const = 0;
    virtual double tail_below(double y) const = 0;
    /// Lebesgue density; empty when nu is purely atomic.
    virtual std::optional<double> density(double x) const = 0;
    virtual std::vector<Atom> atoms() const { return {}; }
    virtual double integrate(const quad::Integrand& f, double lo, double hi) const = 0;
    /// int x 1{|x| > 1} nu(dx)
    virtual double large_jump_mean() const = 0;
    /// int x^2 nu(dx)
    virtual double second_moment() const = 0;
};

/// Characteristic triplet (gamma, sigma^2, nu) with respect to the
/// truncation function 1{|x| <= 1}.
struct LevyTriplet {
    double gamma = 0.0;
    double sigma2 = 0.0;
    std::shared_ptr<const LevyMeasure> measure;
};

struct Moments {
    double mu;  // E L(1)
    double v;   // Var L(1)
};

/// A parametric Lévy driver. Immutable after construction; safe to share
/// across threads.
class Driver {
public:
    static Driver brownian(double gamma, double sigma2);
    static Driver compound_poisson(double intensity, JumpLaw jumps);
    static Driver gamma_subordinator(double shape, double rate);
    static Driver deterministic_drift(double gamma);

    const DriverFamily& family() const { return family_; }
    std::string_view family_name() const;
    const LevyTriplet& triplet() const { return triplet_; }

    /// L has nondecreasing paths: no Gaussian part, no negative jumps and a
    /// nonnegative drift. Only such drivers may feed the volatility model.
    bool nonnegative() const;

    /// Canonical text form, e.g. "gamma:a=1,b=1".
    std::string describe() const;

private:
    explicit Driver(DriverFamily family);

    DriverFamily family_;
    LevyTriplet triplet_;
};

/// Characteristic exponent: E exp(iuL_t) = exp(t psi(u)).
std::complex<double> psi(const Driver& driver, double u);

/// k(theta) = log E exp(-theta L(1)) for subordinators, theta >= 0.
/// Throws NotASubordinator otherwise.
double cumulant_k(const Driver& driver, double theta);

Moments moments(const Driver& driver);

/// Whether int log|x| 1{|x| > 1} nu(dx) is finite. Every supported family
/// has all moments, so this is true throughout; kept as the hook a
/// heavy-tailed family would override.
bool log_moment_finite(const Driver& driver);

/// Exact draw of L_{t+dt} - L_t.
double sample_increment(const Driver& driver, double dt, Stream& stream);

/// Fills out with i.i.d. increments over dt (same law as sample_increment).
void sample_increments(const Driver& driver, double dt, Stream& stream, std::span<double> out);

}  // namespace wbou
