#include <algorithm>
#include <array>
#include <vector>

#include "rbvision/error.hpp"
#include "rbvision/filtering.hpp"
#include "rbvision/simd/kernels.hpp"

namespace rbvision {
namespace {

constexpr int kBins = 256;
constexpr int kCoarseBins = 16;

// Column-histogram median: one fine (256) and one coarse (16) histogram per
// column covering the vertical window, slid down the image; the kernel
// histogram is slid across each row by adding the entering column and
// removing the leaving one.
void median_channel(const ImageRgb& src, ImageRgb& dst, int channel, int radius,
                    const simd::Kernels& k) {
    const int w = src.width();
    const int h = src.height();
    const auto in = src.data();
    auto out = dst.data();
    auto sample = [&](int x, int y) {
        return in[(static_cast<std::size_t>(y) * w + x) * 3 + channel];
    };
    auto clamp_x = [&](int x) { return std::clamp(x, 0, w - 1); };
    auto clamp_y = [&](int y) { return std::clamp(y, 0, h - 1); };

    std::vector<std::uint16_t> col_fine(static_cast<std::size_t>(w) * kBins, 0);
    std::vector<std::uint16_t> col_coarse(static_cast<std::size_t>(w) * kCoarseBins, 0);
    auto fine = [&](int x) { return col_fine.data() + static_cast<std::size_t>(x) * kBins; };
    auto coarse = [&](int x) {
        return col_coarse.data() + static_cast<std::size_t>(x) * kCoarseBins;
    };

    for (int x = 0; x < w; ++x) {
        for (int dy = -radius; dy <= radius; ++dy) {
            const auto v = sample(x, clamp_y(dy));
            ++fine(x)[v];
            ++coarse(x)[v >> 4];
        }
    }

    const int diameter = 2 * radius + 1;
    const int target = (diameter * diameter) / 2;  // 0-based rank of the median
    static constexpr std::array<std::uint16_t, kBins> zeros{};
    std::array<std::uint16_t, kBins> kfine{};
    std::array<std::uint16_t, kCoarseBins> kcoarse{};

    for (int y = 0; y < h; ++y) {
        if (y > 0) {
            const int leave = clamp_y(y - 1 - radius);
            const int enter = clamp_y(y + radius);
            if (leave != enter) {
                for (int x = 0; x < w; ++x) {
                    const auto vo = sample(x, leave);
                    const auto vi = sample(x, enter);
                    --fine(x)[vo];
                    --coarse(x)[vo >> 4];
                    ++fine(x)[vi];
                    ++coarse(x)[vi >> 4];
                }
            }
        }

        kfine.fill(0);
        kcoarse.fill(0);
        for (int dx = -radius; dx <= radius; ++dx) {
            const int cx = clamp_x(dx);
            k.hist_add_sub(kfine.data(), fine(cx), zeros.data(), kBins);
            k.hist_add_sub(kcoarse.data(), coarse(cx), zeros.data(), kCoarseBins);
        }

        for (int x = 0; x < w; ++x) {
            if (x > 0) {
                const int enter = clamp_x(x + radius);
                const int leave = clamp_x(x - 1 - radius);
                if (enter != leave) {
                    k.hist_add_sub(kfine.data(), fine(enter), fine(leave), kBins);
                    k.hist_add_sub(kcoarse.data(), coarse(enter), coarse(leave), kCoarseBins);
                }
            }
            int seen = 0;
            int bucket = 0;
            while (seen + kcoarse[bucket] <= target) {
                seen += kcoarse[bucket];
                ++bucket;
            }
            int value = bucket * 16;
            while (true) {
                seen += kfine[value];
                if (seen > target) break;
                ++value;
            }
            out[(static_cast<std::size_t>(y) * w + x) * 3 + channel] =
                static_cast<std::uint8_t>(value);
        }
    }
}

}  // namespace

ImageRgb median_filter(const ImageRgb& img, int window) {
    return median_filter(img, window, simd::active_kernels());
}

ImageRgb median_filter(const ImageRgb& img, int window, const simd::Kernels& k) {
    require_valid(img, "median_filter");
    FilterSpec::median(window).validate();
    if (window == 1) return img;
    ImageRgb out(img.width(), img.height());
    for (int c = 0; c < 3; ++c) median_channel(img, out, c, window / 2, k);
    return out;
}

}  // namespace rbvision
