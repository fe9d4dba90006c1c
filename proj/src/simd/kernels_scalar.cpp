#include "kernels_impl.hpp"

#include <algorithm>

namespace rbvision::simd {
namespace {

void rgb_to_hsv_scalar(const std::uint8_t* rgb, std::size_t n, float* h, float* s, float* v) {
    for (std::size_t i = 0; i < n; ++i) {
        const float r = rgb[3 * i];
        const float g = rgb[3 * i + 1];
        const float b = rgb[3 * i + 2];
        const float mx = std::max(r, std::max(g, b));
        const float mn = std::min(r, std::min(g, b));
        const float delta = mx - mn;
        v[i] = mx / 255.0f;
        s[i] = mx > 0.0f ? delta / mx : 0.0f;
        float hue = 0.0f;
        if (delta > 0.0f) {
            // Channel priority r, g, b on ties; the AVX2 blend order matches.
            if (mx == r) {
                hue = 60.0f * (g - b) / delta;
                if (hue < 0.0f) hue += 360.0f;
            } else if (mx == g) {
                hue = 60.0f * (b - r) / delta + 120.0f;
            } else {
                hue = 60.0f * (r - g) / delta + 240.0f;
            }
        }
        h[i] = hue;
    }
}

void threshold_hsv_scalar(const float* h, const float* s, const float* v, std::size_t n,
                          float h_lo, float h_hi, float s_min, float v_min,
                          std::uint8_t* mask) {
    const bool wraps = h_lo > h_hi;
    for (std::size_t i = 0; i < n; ++i) {
        const bool hue_ok = wraps ? (h[i] >= h_lo || h[i] <= h_hi)
                                  : (h[i] >= h_lo && h[i] <= h_hi);
        mask[i] = (hue_ok && s[i] >= s_min && v[i] >= v_min) ? 1 : 0;
    }
}

void hist_add_sub_scalar(std::uint16_t* acc, const std::uint16_t* add,
                         const std::uint16_t* sub, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        acc[i] = static_cast<std::uint16_t>(acc[i] + add[i] - sub[i]);
    }
}

void weighted_sum_f32_scalar(const float* const* rows, const float* weights,
                             std::size_t taps, std::size_t n, float* out) {
    for (std::size_t i = 0; i < n; ++i) {
        float acc = 0.0f;
        for (std::size_t k = 0; k < taps; ++k) {
            acc += weights[k] * rows[k][i];
        }
        out[i] = acc;
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{Isa::Scalar, rgb_to_hsv_scalar, threshold_hsv_scalar,
                           hist_add_sub_scalar, weighted_sum_f32_scalar};
    return k;
}

}  // namespace rbvision::simd
