#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rbvision::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Inner-loop kernels shared by the imaging, filtering and segmentation
/// code. Every variant must produce bit-identical output to the scalar one.
struct Kernels {
    Isa isa;

    /// Converts n interleaved RGB pixels to planar hue/saturation/value.
    void (*rgb_to_hsv)(const std::uint8_t* rgb, std::size_t n, float* h, float* s, float* v);

    /// mask[i] = 1 when pixel i lies in the hue interval [h_lo, h_hi]
    /// (wrapping through 360 when h_lo > h_hi) with s >= s_min, v >= v_min.
    void (*threshold_hsv)(const float* h, const float* s, const float* v, std::size_t n,
                          float h_lo, float h_hi, float s_min, float v_min,
                          std::uint8_t* mask);

    /// acc[i] += add[i] - sub[i] for n 16-bit histogram bins.
    void (*hist_add_sub)(std::uint16_t* acc, const std::uint16_t* add,
                         const std::uint16_t* sub, std::size_t n);

    /// Weighted sum of taps rows: out[i] = sum_k w[k] * rows[k][i], accumulated
    /// in tap order. Used by both Gaussian passes.
    void (*weighted_sum_f32)(const float* const* rows, const float* weights,
                             std::size_t taps, std::size_t n, float* out);
};

const Kernels& scalar_kernels();

/// Null when the binary was built without AVX2 support or the CPU lacks it.
const Kernels* avx2_kernels();

/// Best variant for this CPU. Setting RBVISION_SIMD=scalar in the
/// environment forces the scalar kernels.
const Kernels& active_kernels();

}  // namespace rbvision::simd
