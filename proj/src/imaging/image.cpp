#include "rbvision/imaging.hpp"

#include <algorithm>
#include <string>

#include "rbvision/error.hpp"

namespace rbvision {
namespace {

void check_dims(int width, int height) {
    if (width < 1 || height < 1 || width > kMaxImageDim || height > kMaxImageDim) {
        fail(ErrorKind::Parameter, "image dimensions " + std::to_string(width) + "x" +
                                       std::to_string(height) + " outside [1, " +
                                       std::to_string(kMaxImageDim) + "]");
    }
}

}  // namespace

ImageRgb::ImageRgb(int width, int height) : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(pixel_count() * 3, 0);
}

ImageRgb::ImageRgb(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != pixel_count() * 3) {
        fail(ErrorKind::Parameter, "pixel buffer holds " + std::to_string(data_.size()) +
                                       " bytes, expected " + std::to_string(pixel_count() * 3));
    }
}

void ImageRgb::fill(Rgb c) noexcept {
    for (std::size_t i = 0; i < data_.size(); i += 3) {
        data_[i] = c.r;
        data_[i + 1] = c.g;
        data_[i + 2] = c.b;
    }
}

ImageHsv::ImageHsv(int width, int height)
    : width_(width), height_(height), h_(pixel_count()), s_(pixel_count()), v_(pixel_count()) {}

void require_valid(const ImageRgb& img, const char* what) {
    if (img.empty() || img.data().size() != img.pixel_count() * 3) {
        fail(ErrorKind::Parameter, std::string(what) + ": image is empty");
    }
}

}  // namespace rbvision
