#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace rbvision {

namespace simd {
struct Kernels;
}

inline constexpr int kMaxImageDim = 16384;

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Sub-pixel image position. Origin top-left, x right, y down.
struct PixelCoord {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

/// 8-bit interleaved RGB raster, row-major. A default-constructed image is
/// empty (0x0) and rejected by every operation that needs pixels.
class ImageRgb {
public:
    ImageRgb() = default;
    /// Zero-filled raster. Throws ParameterError on out-of-range dimensions.
    ImageRgb(int width, int height);
    ImageRgb(int width, int height, std::vector<std::uint8_t> data);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept {
        return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    }
    bool empty() const noexcept { return pixel_count() == 0; }

    std::span<const std::uint8_t> data() const noexcept { return data_; }
    std::span<std::uint8_t> data() noexcept { return data_; }
    std::span<const std::uint8_t> row(int y) const noexcept {
        return std::span(data_).subspan(static_cast<std::size_t>(y) * stride(), stride());
    }
    std::span<std::uint8_t> row(int y) noexcept {
        return std::span(data_).subspan(static_cast<std::size_t>(y) * stride(), stride());
    }
    std::size_t stride() const noexcept { return static_cast<std::size_t>(width_) * 3; }

    Rgb at(int x, int y) const noexcept {
        const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
        return {data_[i], data_[i + 1], data_[i + 2]};
    }
    void set(int x, int y, Rgb c) noexcept {
        const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
        data_[i] = c.r;
        data_[i + 1] = c.g;
        data_[i + 2] = c.b;
    }
    void fill(Rgb c) noexcept;

    friend bool operator==(const ImageRgb&, const ImageRgb&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> data_;
};

struct Hsv {
    float h = 0.0f;  // degrees, [0, 360)
    float s = 0.0f;  // [0, 1]
    float v = 0.0f;  // [0, 1]
};

/// Planar float HSV raster: one row-major plane per component.
class ImageHsv {
public:
    ImageHsv() = default;
    ImageHsv(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept {
        return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
    }

    std::span<const float> hue() const noexcept { return h_; }
    std::span<const float> saturation() const noexcept { return s_; }
    std::span<const float> value() const noexcept { return v_; }
    std::span<float> hue() noexcept { return h_; }
    std::span<float> saturation() noexcept { return s_; }
    std::span<float> value() noexcept { return v_; }

    Hsv at(int x, int y) const noexcept {
        const std::size_t i = static_cast<std::size_t>(y) * width_ + x;
        return {h_[i], s_[i], v_[i]};
    }
    void set(int x, int y, Hsv p) noexcept {
        const std::size_t i = static_cast<std::size_t>(y) * width_ + x;
        h_[i] = p.h;
        s_[i] = p.s;
        v_[i] = p.v;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<float> h_, s_, v_;
};

/// Reads a binary PPM (P6, maxval 255) or an 8-bit RGB/RGBA PNG. The format
/// is chosen by file signature, not extension.
ImageRgb load_image(const std::filesystem::path& path);

/// Writes a binary P6 PPM with maxval 255.
void save_image(const ImageRgb& img, const std::filesystem::path& path);

/// PPM codec on in-memory buffers; load_image/save_image wrap these.
ImageRgb decode_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const ImageRgb& img);

/// Hexcone RGB to HSV. Hue is in degrees; achromatic pixels get hue 0.
ImageHsv rgb_to_hsv(const ImageRgb& img);
ImageHsv rgb_to_hsv(const ImageRgb& img, const simd::Kernels& kernels);

/// Throws ParameterError if the image is empty or inconsistent.
void require_valid(const ImageRgb& img, const char* what);

}  // namespace rbvision
