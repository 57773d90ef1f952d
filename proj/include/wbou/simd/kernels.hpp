#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace wbou::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Reductions over contiguous double arrays. Every instruction-set variant
/// computes the same mathematical quantity; only the summation order differs.
struct KernelTable {
    Isa isa;
    /// sum_i x[i]
    double (*sum)(const double* x, std::size_t n);
    /// sum_i (x[i] - c)^2
    double (*sum_sq_dev)(const double* x, std::size_t n, double c);
    /// sum_{i < n - lag} x[i] * x[i + lag]; zero when lag >= n
    double (*lagged_dot)(const double* x, std::size_t n, std::size_t lag);
    /// sum_i (x[i+1] - x[i])^2
    double (*sum_sq_diff)(const double* x, std::size_t n);
    /// sum_i |x[i+1] - x[i]|
    double (*sum_abs_diff)(const double* x, std::size_t n);
    /// max_i |x[i+1] - x[i]|; zero when n < 2
    double (*max_abs_diff)(const double* x, std::size_t n);
};

const KernelTable& scalar_kernels();

/// Nullptr when the variant was not compiled into this binary.
const KernelTable* avx2_kernels();

/// True when the variant is compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Table selected at first use: the widest supported variant, unless the
/// environment variable WBOU_SIMD names another one ("scalar" or "avx2").
const KernelTable& active();

/// Table for a specific variant; throws std::invalid_argument when the
/// variant is unavailable on this machine.
const KernelTable& kernels_for(Isa isa);

inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double sum_sq_dev(std::span<const double> x, double c) {
    return active().sum_sq_dev(x.data(), x.size(), c);
}
inline double lagged_dot(std::span<const double> x, std::size_t lag) {
    return active().lagged_dot(x.data(), x.size(), lag);
}
inline double sum_sq_diff(std::span<const double> x) {
    return active().sum_sq_diff(x.data(), x.size());
}
inline double sum_abs_diff(std::span<const double> x) {
    return active().sum_abs_diff(x.data(), x.size());
}
inline double max_abs_diff(std::span<const double> x) {
    return active().max_abs_diff(x.data(), x.size());
}

}  // namespace wbou::simd
