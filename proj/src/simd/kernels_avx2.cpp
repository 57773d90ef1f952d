#include "wbou/simd/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define WBOU_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace wbou::simd {

#if WBOU_HAVE_AVX2_KERNELS
namespace {

// Functions carry the target attribute instead of the translation unit being
// compiled with -mavx2, so no AVX2 encoding can leak into inline functions
// shared with the rest of the program.
#define WBOU_AVX2 __attribute__((target("avx2,fma")))

WBOU_AVX2 inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

WBOU_AVX2 inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

WBOU_AVX2 double sum_avx2(const double* x, std::size_t n) {
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    __m256d a2 = _mm256_setzero_pd(), a3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
        a1 = _mm256_add_pd(a1, _mm256_loadu_pd(x + i + 4));
        a2 = _mm256_add_pd(a2, _mm256_loadu_pd(x + i + 8));
        a3 = _mm256_add_pd(a3, _mm256_loadu_pd(x + i + 12));
    }
    for (; i + 4 <= n; i += 4) a0 = _mm256_add_pd(a0, _mm256_loadu_pd(x + i));
    double s = hsum(_mm256_add_pd(_mm256_add_pd(a0, a1), _mm256_add_pd(a2, a3)));
    for (; i < n; ++i) s += x[i];
    return s;
}

WBOU_AVX2 double sum_sq_dev_avx2(const double* x, std::size_t n, double c) {
    const __m256d vc = _mm256_set1_pd(c);
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 4), vc);
        a0 = _mm256_fmadd_pd(d0, d0, a0);
        a1 = _mm256_fmadd_pd(d1, d1, a1);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
        a0 = _mm256_fmadd_pd(d0, d0, a0);
    }
    double s = hsum(_mm256_add_pd(a0, a1));
    for (; i < n; ++i) {
        const double d = x[i] - c;
        s += d * d;
    }
    return s;
}

WBOU_AVX2 double lagged_dot_avx2(const double* x, std::size_t n, std::size_t lag) {
    if (lag >= n) return 0.0;
    const std::size_t m = n - lag;
    const double* y = x + lag;
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    __m256d a2 = _mm256_setzero_pd(), a3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= m; i += 16) {
        a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
        a1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), a1);
        a2 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 8), _mm256_loadu_pd(y + i + 8), a2);
        a3 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 12), _mm256_loadu_pd(y + i + 12), a3);
    }
    for (; i + 4 <= m; i += 4) {
        a0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), a0);
    }
    double s = hsum(_mm256_add_pd(_mm256_add_pd(a0, a1), _mm256_add_pd(a2, a3)));
    for (; i < m; ++i) s += x[i] * y[i];
    return s;
}

WBOU_AVX2 double sum_sq_diff_avx2(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    const std::size_t m = n - 1;
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= m; i += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 5), _mm256_loadu_pd(x + i + 4));
        a0 = _mm256_fmadd_pd(d0, d0, a0);
        a1 = _mm256_fmadd_pd(d1, d1, a1);
    }
    for (; i + 4 <= m; i += 4) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
        a0 = _mm256_fmadd_pd(d0, d0, a0);
    }
    double s = hsum(_mm256_add_pd(a0, a1));
    for (; i < m; ++i) {
        const double d = x[i + 1] - x[i];
        s += d * d;
    }
    return s;
}

WBOU_AVX2 double sum_abs_diff_avx2(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    const std::size_t m = n - 1;
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= m; i += 8) {
        a0 = _mm256_add_pd(
            a0, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i))));
        a1 = _mm256_add_pd(
            a1, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i + 5), _mm256_loadu_pd(x + i + 4))));
    }
    for (; i + 4 <= m; i += 4) {
        a0 = _mm256_add_pd(
            a0, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i))));
    }
    double s = hsum(_mm256_add_pd(a0, a1));
    for (; i < m; ++i) {
        const double d = x[i + 1] - x[i];
        s += d < 0 ? -d : d;
    }
    return s;
}

WBOU_AVX2 double max_abs_diff_avx2(const double* x, std::size_t n) {
    if (n < 2) return 0.0;
    const std::size_t m = n - 1;
    __m256d a0 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        a0 = _mm256_max_pd(
            a0, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i))));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, a0);
    double r = lanes[0];
    for (int k = 1; k < 4; ++k) r = lanes[k] > r ? lanes[k] : r;
    for (; i < m; ++i) {
        double d = x[i + 1] - x[i];
        d = d < 0 ? -d : d;
        if (d > r) r = d;
    }
    return r;
}

#undef WBOU_AVX2

constexpr KernelTable kAvx2{
    Isa::avx2,        sum_avx2,          sum_sq_dev_avx2,   lagged_dot_avx2,
    sum_sq_diff_avx2, sum_abs_diff_avx2, max_abs_diff_avx2,
};

}  // namespace

const KernelTable* avx2_kernels() { return &kAvx2; }

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace wbou::simd
