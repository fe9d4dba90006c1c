#include "kernels_impl.hpp"

#include <cstdlib>
#include <string_view>

namespace rbvision::simd {

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

const Kernels* avx2_kernels() {
#if RBVISION_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2_kernels_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

const Kernels& active_kernels() {
    static const Kernels& chosen = [] () -> const Kernels& {
        if (const char* env = std::getenv("RBVISION_SIMD");
            env != nullptr && std::string_view(env) == "scalar") {
            return scalar_kernels();
        }
        if (const Kernels* k = avx2_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace rbvision::simd
