#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbvision/calibration.hpp"
#include "rbvision/imaging.hpp"

namespace rbvision {

/// The cylindrical beacon: a top ring, a plain body and a bottom ring.
/// Lengths in millimetres.
struct LandmarkSpec {
    double height_mm = 70.0;
    double diameter_mm = 35.0;
    double ring_height_mm = 20.0;
    Rgb top_ring_color{255, 0, 0};
    Rgb bottom_ring_color{0, 0, 255};
    Rgb body_color{255, 255, 255};

    /// Distance between the two ring-band mid-heights.
    double ring_center_separation_mm() const noexcept { return height_mm - ring_height_mm; }
    void validate() const;
};

/// Ideal pinhole camera, optical axis horizontal, principal point at the
/// image centre ((w-1)/2, (h-1)/2).
struct CameraSpec {
    double focal_px = 700.0;
    int image_width = 800;
    int image_height = 600;
    /// Optical axis height above the ground; defaults to landmark mid-height.
    std::optional<double> height_cm;

    double cx() const noexcept { return (image_width - 1) / 2.0; }
    double cy() const noexcept { return (image_height - 1) / 2.0; }
    void validate() const;
};

/// Landmark placement relative to the camera. d_v is the forward distance
/// to the landmark's near face (its axis sits one radius further); d_h is
/// the lateral offset of the axis, positive right.
struct Pose {
    double d_v_cm = 0.0;
    double d_h_cm = 0.0;
};

struct RingProjection {
    PixelCoord red;
    PixelCoord blue;
    double L_px = 0.0;
    double d_h_px = 0.0;
};

/// Pose plus the quantities an ideal measurement would produce.
struct GroundTruth {
    Pose pose;
    double L_px = 0.0;
    double d_h_px = 0.0;
    double theta_deg = 0.0;  // atan(d_h / d_v)
    double d_cm = 0.0;       // sqrt(d_v^2 + d_h^2)
};

struct RenderOptions {
    Rgb background{180, 180, 180};
    double noise_sigma = 0.0;  // additive Gaussian, intensity units
    std::uint64_t seed = 1;
};

/// Pinhole projection of the near-face points at the two ring-band
/// mid-heights. On-axis or not, L_px = f * s / d_v. Throws OutOfView when
/// any part of the landmark falls outside the frame.
RingProjection project_ring_centers(const Pose& pose, const CameraSpec& cam,
                                    const LandmarkSpec& lm);

GroundTruth ground_truth(const Pose& pose, const CameraSpec& cam, const LandmarkSpec& lm);

/// Ray-casts the landmark (one ray per pixel centre against the finite
/// cylinder) over a flat background, then adds seeded Gaussian noise
/// clamped to 0-255. Same inputs and seed give identical bytes.
ImageRgb render(const Pose& pose, const CameraSpec& cam, const LandmarkSpec& lm,
                const RenderOptions& opts = {});

/// The evaluation sweep: d_v in {28, 32, ..., 72} cm, bearings
/// {-25, -20, ..., 25} deg with d_h = d_v * tan(theta). Ordered by d_v then
/// bearing.
std::vector<Pose> standard_grid();

std::vector<Pose> make_grid(double d_v_min, double d_v_max, double d_v_step,
                            double theta_min, double theta_max, double theta_step);

struct DatasetOptions {
    RenderOptions render;
    /// Per-pose noise seed = mix(base_seed, pose index); render.seed is ignored.
    std::uint64_t base_seed = 1;
};

/// Renders every pose to pose_NNN.ppm in out_dir and writes manifest.csv
/// (filename,d_v_cm,d_h_cm,theta_deg,d_cm,L_px,d_h_px). Returns the rows.
std::vector<ManifestRow> generate_dataset(std::span<const Pose> grid, const CameraSpec& cam,
                                          const LandmarkSpec& lm,
                                          const std::filesystem::path& out_dir,
                                          const DatasetOptions& opts = {});

std::uint64_t pose_seed(std::uint64_t base_seed, std::size_t index);

/// One manifest CSV row (no trailing newline).
std::string manifest_line(const std::string& filename, const GroundTruth& truth);

}  // namespace rbvision
