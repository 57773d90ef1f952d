#include "wbou/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <limits>
#include <vector>

namespace wbou::quad {

namespace {
constexpr unsigned kMaxDepth = 18;
}

double finite(const Integrand& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    // Boost's error estimate has an absolute floor near machine epsilon, so
    // short intervals are mapped onto [0, 1] before integrating.
    const double width = b - a;
    auto unit = [&](double s) { return f(a + width * s); };
    double error = 0.0;
    return width * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(unit, 0.0, 1.0, kMaxDepth,
                                                                                  rel_tol, &error);
}

double finite_with_breaks(const Integrand& f, double a, double b, std::span<const double> breaks,
                          double rel_tol) {
    std::vector<double> pts{a};
    for (double p : breaks) {
        if (p > a && p < b) pts.push_back(p);
    }
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += finite(f, pts[i], pts[i + 1], rel_tol);
    return total;
}

double singular(const Integrand& f, double a, double b, double rel_tol) {
    if (a == b) return 0.0;
    thread_local boost::math::quadrature::tanh_sinh<double> integrator(15);
    return integrator.integrate(f, a, b, rel_tol);
}

double half_line(const Integrand& f, double a, double rel_tol) {
    thread_local boost::math::quadrature::exp_sinh<double> integrator(12);
    return integrator.integrate(f, a, std::numeric_limits<double>::infinity(), rel_tol);
}

}  // namespace wbou::quad
