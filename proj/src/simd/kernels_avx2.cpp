#include "kernels_impl.hpp"

#include <immintrin.h>

#include <cstring>

namespace rbvision::simd {
namespace {

void rgb_to_hsv_avx2(const std::uint8_t* rgb, std::size_t n, float* h, float* s, float* v) {
    const __m256i byte_mask = _mm256_set1_epi32(0xFF);
    const __m256i offsets = _mm256_setr_epi32(0, 3, 6, 9, 12, 15, 18, 21);
    const __m256 zero = _mm256_setzero_ps();
    const __m256 k60 = _mm256_set1_ps(60.0f);
    const __m256 k120 = _mm256_set1_ps(120.0f);
    const __m256 k240 = _mm256_set1_ps(240.0f);
    const __m256 k360 = _mm256_set1_ps(360.0f);
    const __m256 k255 = _mm256_set1_ps(255.0f);

    std::size_t i = 0;
    // Each gather lane reads 4 bytes starting at a channel; keep one whole
    // pixel of slack after the block so the last read stays in bounds.
    for (; i + 8 < n; i += 8) {
        const auto* base = reinterpret_cast<const int*>(rgb + 3 * i);
        const __m256i raw_r = _mm256_i32gather_epi32(base, offsets, 1);
        const __m256i raw_g = _mm256_i32gather_epi32(
            reinterpret_cast<const int*>(rgb + 3 * i + 1), offsets, 1);
        const __m256i raw_b = _mm256_i32gather_epi32(
            reinterpret_cast<const int*>(rgb + 3 * i + 2), offsets, 1);
        const __m256 r = _mm256_cvtepi32_ps(_mm256_and_si256(raw_r, byte_mask));
        const __m256 g = _mm256_cvtepi32_ps(_mm256_and_si256(raw_g, byte_mask));
        const __m256 b = _mm256_cvtepi32_ps(_mm256_and_si256(raw_b, byte_mask));

        const __m256 mx = _mm256_max_ps(r, _mm256_max_ps(g, b));
        const __m256 mn = _mm256_min_ps(r, _mm256_min_ps(g, b));
        const __m256 delta = _mm256_sub_ps(mx, mn);

        _mm256_storeu_ps(v + i, _mm256_div_ps(mx, k255));

        const __m256 mx_pos = _mm256_cmp_ps(mx, zero, _CMP_GT_OQ);
        const __m256 sat = _mm256_div_ps(delta, mx);
        _mm256_storeu_ps(s + i, _mm256_and_ps(sat, mx_pos));

        const __m256 chroma = _mm256_cmp_ps(delta, zero, _CMP_GT_OQ);
        __m256 hr = _mm256_div_ps(_mm256_mul_ps(k60, _mm256_sub_ps(g, b)), delta);
        hr = _mm256_add_ps(hr, _mm256_and_ps(k360, _mm256_cmp_ps(hr, zero, _CMP_LT_OQ)));
        const __m256 hg =
            _mm256_add_ps(_mm256_div_ps(_mm256_mul_ps(k60, _mm256_sub_ps(b, r)), delta), k120);
        const __m256 hb =
            _mm256_add_ps(_mm256_div_ps(_mm256_mul_ps(k60, _mm256_sub_ps(r, g)), delta), k240);

        const __m256 is_r = _mm256_cmp_ps(mx, r, _CMP_EQ_OQ);
        const __m256 is_g = _mm256_cmp_ps(mx, g, _CMP_EQ_OQ);
        // Priority r > g > b: blend from lowest priority upward.
        __m256 hue = _mm256_blendv_ps(hb, hg, is_g);
        hue = _mm256_blendv_ps(hue, hr, is_r);
        _mm256_storeu_ps(h + i, _mm256_and_ps(hue, chroma));
    }
    if (i < n) {
        scalar_kernels().rgb_to_hsv(rgb + 3 * i, n - i, h + i, s + i, v + i);
    }
}

void threshold_hsv_avx2(const float* h, const float* s, const float* v, std::size_t n,
                        float h_lo, float h_hi, float s_min, float v_min,
                        std::uint8_t* mask) {
    const bool wraps = h_lo > h_hi;
    const __m256 lo = _mm256_set1_ps(h_lo);
    const __m256 hi = _mm256_set1_ps(h_hi);
    const __m256 smin = _mm256_set1_ps(s_min);
    const __m256 vmin = _mm256_set1_ps(v_min);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 hv = _mm256_loadu_ps(h + i);
        const __m256 ge_lo = _mm256_cmp_ps(hv, lo, _CMP_GE_OQ);
        const __m256 le_hi = _mm256_cmp_ps(hv, hi, _CMP_LE_OQ);
        const __m256 hue_ok = wraps ? _mm256_or_ps(ge_lo, le_hi) : _mm256_and_ps(ge_lo, le_hi);
        const __m256 sv_ok =
            _mm256_and_ps(_mm256_cmp_ps(_mm256_loadu_ps(s + i), smin, _CMP_GE_OQ),
                          _mm256_cmp_ps(_mm256_loadu_ps(v + i), vmin, _CMP_GE_OQ));
        const int bits = _mm256_movemask_ps(_mm256_and_ps(hue_ok, sv_ok));
        for (int k = 0; k < 8; ++k) {
            mask[i + k] = static_cast<std::uint8_t>((bits >> k) & 1);
        }
    }
    if (i < n) {
        scalar_kernels().threshold_hsv(h + i, s + i, v + i, n - i, h_lo, h_hi, s_min, v_min,
                                       mask + i);
    }
}

void hist_add_sub_avx2(std::uint16_t* acc, const std::uint16_t* add,
                       const std::uint16_t* sub, std::size_t n) {
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        auto* a = reinterpret_cast<__m256i*>(acc + i);
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(add + i));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sub + i));
        _mm256_storeu_si256(a, _mm256_sub_epi16(_mm256_add_epi16(_mm256_loadu_si256(a), x), y));
    }
    if (i < n) {
        scalar_kernels().hist_add_sub(acc + i, add + i, sub + i, n - i);
    }
}

void weighted_sum_f32_avx2(const float* const* rows, const float* weights,
                           std::size_t taps, std::size_t n, float* out) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 acc = _mm256_setzero_ps();
        for (std::size_t k = 0; k < taps; ++k) {
            acc = _mm256_add_ps(acc, _mm256_mul_ps(_mm256_set1_ps(weights[k]),
                                                   _mm256_loadu_ps(rows[k] + i)));
        }
        _mm256_storeu_ps(out + i, acc);
    }
    for (; i < n; ++i) {
        float acc = 0.0f;
        for (std::size_t k = 0; k < taps; ++k) acc += weights[k] * rows[k][i];
        out[i] = acc;
    }
}

}  // namespace

const Kernels& avx2_kernels_unchecked() {
    static const Kernels k{Isa::Avx2, rgb_to_hsv_avx2, threshold_hsv_avx2, hist_add_sub_avx2,
                           weighted_sum_f32_avx2};
    return k;
}

}  // namespace rbvision::simd
