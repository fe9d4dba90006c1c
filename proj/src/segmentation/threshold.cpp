#include <algorithm>
#include <cmath>

#include "rbvision/error.hpp"
#include "rbvision/segmentation.hpp"
#include "rbvision/simd/kernels.hpp"

namespace rbvision {

bool HsvRange::contains(Hsv p) const noexcept {
    // Compare in float, matching the kernels' precision.
    const float lo = static_cast<float>(h_lo);
    const float hi = static_cast<float>(h_hi);
    const bool hue_ok = wraps() ? (p.h >= lo || p.h <= hi) : (p.h >= lo && p.h <= hi);
    return hue_ok && p.s >= static_cast<float>(s_min) && p.v >= static_cast<float>(v_min);
}

void HsvRange::validate() const {
    auto in = [](double x, double lo, double hi) { return std::isfinite(x) && x >= lo && x <= hi; };
    if (!in(h_lo, 0.0, 360.0) || h_lo >= 360.0 || !in(h_hi, 0.0, 360.0) || h_hi >= 360.0) {
        fail(ErrorKind::Parameter, "hue bounds must lie in [0, 360)");
    }
    if (!in(s_min, 0.0, 1.0) || !in(v_min, 0.0, 1.0)) {
        fail(ErrorKind::Parameter, "s_min and v_min must lie in [0, 1]");
    }
}

ColorMask::ColorMask(int width, int height)
    : width_(width), height_(height),
      bits_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0) {}

std::size_t ColorMask::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

ColorMask threshold_hsv(const ImageHsv& img, const HsvRange& range) {
    return threshold_hsv(img, range, simd::active_kernels());
}

ColorMask threshold_hsv(const ImageHsv& img, const HsvRange& range,
                        const simd::Kernels& kernels) {
    ColorMask mask(img.width(), img.height());
    kernels.threshold_hsv(img.hue().data(), img.saturation().data(), img.value().data(),
                          img.pixel_count(), static_cast<float>(range.h_lo),
                          static_cast<float>(range.h_hi), static_cast<float>(range.s_min),
                          static_cast<float>(range.v_min), mask.bits().data());
    return mask;
}

}  // namespace rbvision
