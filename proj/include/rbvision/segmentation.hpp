#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rbvision/filtering.hpp"
#include "rbvision/imaging.hpp"

namespace rbvision {

/// Hue interval in degrees (wraps through 360 when h_lo > h_hi) plus
/// saturation and value floors.
struct HsvRange {
    double h_lo = 0.0;
    double h_hi = 0.0;
    double s_min = 0.0;
    double v_min = 0.0;

    static HsvRange default_red() { return {350.0, 10.0, 0.5, 0.3}; }
    static HsvRange default_blue() { return {200.0, 260.0, 0.5, 0.3}; }

    bool wraps() const noexcept { return h_lo > h_hi; }
    bool contains(Hsv p) const noexcept;
    void validate() const;
};

class ColorMask {
public:
    ColorMask() = default;
    ColorMask(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    bool at(int x, int y) const noexcept {
        return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
    }
    void set(int x, int y, bool on = true) noexcept {
        bits_[static_cast<std::size_t>(y) * width_ + x] = on ? 1 : 0;
    }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }
    std::span<std::uint8_t> bits() noexcept { return bits_; }
    std::size_t count() const noexcept;

    friend bool operator==(const ColorMask&, const ColorMask&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

struct BoundingBox {
    int min_x = 0;
    int min_y = 0;
    int max_x = 0;
    int max_y = 0;
};

/// One 8-connected region of a mask with its binary image moments.
struct Blob {
    std::int64_t pixel_count = 0;
    // Raw moments; exact integer sums.
    std::int64_t m00 = 0;
    std::int64_t m10 = 0;
    std::int64_t m01 = 0;
    std::int64_t m20 = 0;
    std::int64_t m02 = 0;
    std::int64_t m11 = 0;
    // Central moments.
    double mu20 = 0.0;
    double mu02 = 0.0;
    double mu11 = 0.0;
    PixelCoord centroid;
    BoundingBox bbox;
};

struct RingDetection {
    PixelCoord red_centroid;
    PixelCoord blue_centroid;
    Blob red_blob;
    Blob blue_blob;
    double L = 0.0;  // pixel distance between the centroids
    PixelCoord midpoint;
    int image_width = 0;
    int image_height = 0;

    /// Signed column offset of the midpoint from the vertical centerline
    /// x = (width - 1) / 2; positive right.
    double d_h_px() const noexcept { return midpoint.x - (image_width - 1) / 2.0; }
};

struct SegmentationConfig {
    FilterSpec filter = FilterSpec::median();
    HsvRange red = HsvRange::default_red();
    HsvRange blue = HsvRange::default_blue();
    int min_blob_px = 20;

    void validate() const;
};

ColorMask threshold_hsv(const ImageHsv& img, const HsvRange& range);
ColorMask threshold_hsv(const ImageHsv& img, const HsvRange& range,
                        const simd::Kernels& kernels);

/// 8-connected labeling. Blobs are sorted by pixel count, largest first;
/// ties go to the smaller bounding-box origin (y, then x).
std::vector<Blob> connected_components(const ColorMask& mask);

/// Filter, convert, threshold both ring colours and measure the ring
/// centroids. Throws NoRedRegion, NoBlueRegion, DegenerateDetection or
/// GeometryInverted.
RingDetection detect_rings(const ImageRgb& img, const SegmentationConfig& cfg);

}  // namespace rbvision
