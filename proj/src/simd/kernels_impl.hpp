#pragma once

#include "rbvision/simd/kernels.hpp"

namespace rbvision::simd {

#if RBVISION_HAVE_AVX2
// Defined in kernels_avx2.cpp, which is the only TU built with -mavx2.
const Kernels& avx2_kernels_unchecked();
#endif

}  // namespace rbvision::simd
