#include "rbvision/imaging.hpp"
#include "rbvision/simd/kernels.hpp"

namespace rbvision {

ImageHsv rgb_to_hsv(const ImageRgb& img) { return rgb_to_hsv(img, simd::active_kernels()); }

ImageHsv rgb_to_hsv(const ImageRgb& img, const simd::Kernels& kernels) {
    require_valid(img, "rgb_to_hsv");
    ImageHsv out(img.width(), img.height());
    kernels.rgb_to_hsv(img.data().data(), img.pixel_count(), out.hue().data(),
                       out.saturation().data(), out.value().data());
    return out;
}

}  // namespace rbvision
