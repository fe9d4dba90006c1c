#include <algorithm>
#include <cmath>
#include <random>

#include "rbvision/synthcam.hpp"

namespace rbvision {

ImageRgb render(const Pose& pose, const CameraSpec& cam, const LandmarkSpec& lm,
                const RenderOptions& opts) {
    // Validates the pose and frustum containment.
    (void)project_ring_centers(pose, cam, lm);

    ImageRgb img(cam.image_width, cam.image_height);
    img.fill(opts.background);

    const double r = lm.diameter_mm / 20.0;
    const double height = lm.height_mm / 10.0;
    const double ring = lm.ring_height_mm / 10.0;
    const double cam_h = cam.height_cm.value_or(height / 2.0);
    const double axis_x = pose.d_h_cm;
    const double axis_z = pose.d_v_cm + r;
    const double f = cam.focal_px;

    // Screen-space bounds of the landmark's bounding box (near face is the
    // widest and tallest).
    const double near = pose.d_v_cm;
    const int u0 = std::max(0, static_cast<int>(std::floor(f * (axis_x - r) / near + cam.cx())) - 1);
    const int u1 = std::min(cam.image_width - 1,
                            static_cast<int>(std::ceil(f * (axis_x + r) / near + cam.cx())) + 1);
    const int v0 = std::max(0, static_cast<int>(std::floor(f * (cam_h - height) / near + cam.cy())) - 1);
    const int v1 = std::min(cam.image_height - 1,
                            static_cast<int>(std::ceil(f * cam_h / near + cam.cy())) + 1);

    const double c = axis_x * axis_x + axis_z * axis_z - r * r;
    for (int v = v0; v <= v1; ++v) {
        const double dy = (v - cam.cy()) / f;
        for (int u = u0; u <= u1; ++u) {
            // Ray p(t) = t * (dx, dy, 1) against the vertical cylinder
            // (x - axis_x)^2 + (z - axis_z)^2 = r^2; nearest root.
            const double dx = (u - cam.cx()) / f;
            const double a = dx * dx + 1.0;
            const double b = -2.0 * (dx * axis_x + axis_z);
            const double disc = b * b - 4.0 * a * c;
            if (disc < 0.0) continue;
            const double t = (-b - std::sqrt(disc)) / (2.0 * a);
            const double hit_height = cam_h - t * dy;
            if (hit_height < 0.0 || hit_height > height) continue;
            Rgb color = lm.body_color;
            if (hit_height >= height - ring) {
                color = lm.top_ring_color;
            } else if (hit_height <= ring) {
                color = lm.bottom_ring_color;
            }
            img.set(u, v, color);
        }
    }

    if (opts.noise_sigma > 0.0) {
        std::mt19937_64 rng(opts.seed);
        std::normal_distribution<double> noise(0.0, opts.noise_sigma);
        for (auto& byte : img.data()) {
            const double value = std::round(byte + noise(rng));
            byte = static_cast<std::uint8_t>(std::clamp(value, 0.0, 255.0));
        }
    }
    return img;
}

}  // namespace rbvision
