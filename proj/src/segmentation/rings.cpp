#include <cmath>
#include <optional>
#include <string>

#include "rbvision/error.hpp"
#include "rbvision/segmentation.hpp"

namespace rbvision {
namespace {

std::optional<Blob> largest_qualifying(const ColorMask& mask, int min_blob_px) {
    const auto blobs = connected_components(mask);
    if (blobs.empty() || blobs.front().pixel_count < min_blob_px) return std::nullopt;
    return blobs.front();
}

}  // namespace

void SegmentationConfig::validate() const {
    filter.validate();
    red.validate();
    blue.validate();
    if (min_blob_px < 1) {
        fail(ErrorKind::Parameter, "min_blob_px must be >= 1, got " + std::to_string(min_blob_px));
    }
}

RingDetection detect_rings(const ImageRgb& img, const SegmentationConfig& cfg) {
    require_valid(img, "detect_rings");
    cfg.validate();

    const ImageHsv hsv = rgb_to_hsv(apply_filter(img, cfg.filter));
    const auto red = largest_qualifying(threshold_hsv(hsv, cfg.red), cfg.min_blob_px);
    const auto blue = largest_qualifying(threshold_hsv(hsv, cfg.blue), cfg.min_blob_px);
    if (!red) {
        fail(ErrorKind::NoRedRegion,
             "no red region of at least " + std::to_string(cfg.min_blob_px) + " px");
    }
    if (!blue) {
        fail(ErrorKind::NoBlueRegion,
             "no blue region of at least " + std::to_string(cfg.min_blob_px) + " px");
    }

    RingDetection det;
    det.red_blob = *red;
    det.blue_blob = *blue;
    det.red_centroid = red->centroid;
    det.blue_centroid = blue->centroid;
    det.L = std::hypot(det.blue_centroid.x - det.red_centroid.x,
                       det.blue_centroid.y - det.red_centroid.y);
    det.midpoint = {(det.red_centroid.x + det.blue_centroid.x) / 2.0,
                    (det.red_centroid.y + det.blue_centroid.y) / 2.0};
    det.image_width = img.width();
    det.image_height = img.height();

    if (det.L < 1.0) {
        fail(ErrorKind::DegenerateDetection,
             "ring centroids coincide (L = " + std::to_string(det.L) + " px)");
    }
    if (!(det.red_centroid.y < det.blue_centroid.y)) {
        fail(ErrorKind::GeometryInverted, "blue ring centroid is not below the red one");
    }
    return det;
}

}  // namespace rbvision
