#include "wbou/simd/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wbou::simd {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& select() {
    const char* forced = std::getenv("WBOU_SIMD");
    if (forced != nullptr) {
        const std::string name(forced);
        if (name == "scalar") return scalar_kernels();
        if (name == "avx2" && isa_available(Isa::avx2)) return *avx2_kernels();
    }
    if (isa_available(Isa::avx2)) return *avx2_kernels();
    return scalar_kernels();
}

}  // namespace

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2: return avx2_kernels() != nullptr && cpu_has_avx2();
    }
    return false;
}

const KernelTable& active() {
    static const KernelTable& table = select();
    return table;
}

const KernelTable& kernels_for(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("kernel variant not available: " + std::string(isa_name(isa)));
    }
    return isa == Isa::avx2 ? *avx2_kernels() : scalar_kernels();
}

}  // namespace wbou::simd
