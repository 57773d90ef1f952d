#include "wbou/simd/kernels.hpp"

#include <cmath>

namespace wbou::simd {
namespace {

double sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double sum_sq_dev_scalar(const double* x, std::size_t n, double c) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - c;
        s += d * d;
    }
    return s;
}

double lagged_dot_scalar(const double* x, std::size_t n, std::size_t lag) {
    if (lag >= n) return 0.0;
    double s = 0.0;
    const std::size_t m = n - lag;
    for (std::size_t i = 0; i < m; ++i) s += x[i] * x[i + lag];
    return s;
}

double sum_sq_diff_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = x[i] - x[i - 1];
        s += d * d;
    }
    return s;
}

double sum_abs_diff_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 1; i < n; ++i) s += std::fabs(x[i] - x[i - 1]);
    return s;
}

double max_abs_diff_scalar(const double* x, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = std::fabs(x[i] - x[i - 1]);
        if (d > m) m = d;
    }
    return m;
}

constexpr KernelTable kScalar{
    Isa::scalar,      sum_scalar,          sum_sq_dev_scalar,   lagged_dot_scalar,
    sum_sq_diff_scalar, sum_abs_diff_scalar, max_abs_diff_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace wbou::simd
