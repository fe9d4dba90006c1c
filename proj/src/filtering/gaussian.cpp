#include <algorithm>
#include <cmath>
#include <vector>

#include "rbvision/filtering.hpp"
#include "rbvision/simd/kernels.hpp"

namespace rbvision {
namespace {

std::vector<float> gaussian_kernel(int window, double sigma) {
    const int radius = window / 2;
    std::vector<double> w(window);
    double sum = 0.0;
    for (int i = 0; i < window; ++i) {
        const double d = i - radius;
        w[i] = std::exp(-d * d / (2.0 * sigma * sigma));
        sum += w[i];
    }
    std::vector<float> out(window);
    for (int i = 0; i < window; ++i) out[i] = static_cast<float>(w[i] / sum);
    return out;
}

}  // namespace

ImageRgb gaussian_filter(const ImageRgb& img, int window, double sigma_space) {
    return gaussian_filter(img, window, sigma_space, simd::active_kernels());
}

ImageRgb gaussian_filter(const ImageRgb& img, int window, double sigma_space,
                         const simd::Kernels& k) {
    require_valid(img, "gaussian_filter");
    FilterSpec::gaussian(window, sigma_space).validate();

    const int w = img.width();
    const int h = img.height();
    const int radius = window / 2;
    const std::size_t row_len = img.stride();
    const auto weights = gaussian_kernel(window, sigma_space);

    // Horizontal pass on a border-replicated float copy of each row; tap k
    // of output element i reads padded[i + 3k].
    std::vector<float> horiz(static_cast<std::size_t>(h) * row_len);
    std::vector<float> padded((static_cast<std::size_t>(w) + 2 * radius) * 3);
    std::vector<const float*> taps(window);
    for (int y = 0; y < h; ++y) {
        const auto src = img.row(y);
        for (int px = -radius; px < w + radius; ++px) {
            const int sx = std::clamp(px, 0, w - 1);
            for (int c = 0; c < 3; ++c) {
                padded[static_cast<std::size_t>(px + radius) * 3 + c] = src[sx * 3 + c];
            }
        }
        for (int t = 0; t < window; ++t) taps[t] = padded.data() + 3 * t;
        k.weighted_sum_f32(taps.data(), weights.data(), window, row_len,
                           horiz.data() + static_cast<std::size_t>(y) * row_len);
    }

    ImageRgb out(w, h);
    std::vector<float> acc(row_len);
    for (int y = 0; y < h; ++y) {
        for (int t = 0; t < window; ++t) {
            const int sy = std::clamp(y + t - radius, 0, h - 1);
            taps[t] = horiz.data() + static_cast<std::size_t>(sy) * row_len;
        }
        k.weighted_sum_f32(taps.data(), weights.data(), window, row_len, acc.data());
        auto dst = out.row(y);
        for (std::size_t i = 0; i < row_len; ++i) {
            dst[i] = static_cast<std::uint8_t>(std::clamp(std::floor(acc[i] + 0.5f), 0.0f, 255.0f));
        }
    }
    return out;
}

}  // namespace rbvision
