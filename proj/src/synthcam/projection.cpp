#include <cmath>
#include <numbers>
#include <string>

#include "rbvision/error.hpp"
#include "rbvision/synthcam.hpp"

namespace rbvision {

void LandmarkSpec::validate() const {
    if (!(diameter_mm > 0.0)) fail(ErrorKind::Parameter, "landmark diameter must be > 0");
    if (!(ring_height_mm > 0.0) || !(2.0 * ring_height_mm <= height_mm)) {
        fail(ErrorKind::Parameter, "need 0 < 2 * ring_height <= landmark height");
    }
}

void CameraSpec::validate() const {
    if (!(focal_px > 0.0)) fail(ErrorKind::Parameter, "focal length must be > 0");
    if (image_width < 1 || image_height < 1 || image_width > kMaxImageDim ||
        image_height > kMaxImageDim) {
        fail(ErrorKind::Parameter, "camera image dimensions out of range");
    }
}

namespace {

double camera_height_cm(const CameraSpec& cam, const LandmarkSpec& lm) {
    return cam.height_cm.value_or(lm.height_mm / 20.0);
}

// Every corner of the landmark's bounding box must project inside the frame.
void require_in_view(const Pose& pose, const CameraSpec& cam, const LandmarkSpec& lm) {
    if (!(pose.d_v_cm > 0.0) || !std::isfinite(pose.d_v_cm) || !std::isfinite(pose.d_h_cm)) {
        fail(ErrorKind::Parameter, "pose needs a finite d_v > 0");
    }
    const double r = lm.diameter_mm / 20.0;
    const double cam_h = camera_height_cm(cam, lm);
    const double height = lm.height_mm / 10.0;
    for (const double z : {pose.d_v_cm, pose.d_v_cm + 2.0 * r}) {
        for (const double x : {pose.d_h_cm - r, pose.d_h_cm + r}) {
            for (const double y : {cam_h - height, cam_h}) {
                const double u = cam.focal_px * x / z + cam.cx();
                const double v = cam.focal_px * y / z + cam.cy();
                if (u < 0.0 || u > cam.image_width - 1 || v < 0.0 || v > cam.image_height - 1) {
                    fail(ErrorKind::OutOfView,
                         "landmark at d_v=" + std::to_string(pose.d_v_cm) +
                             " cm, d_h=" + std::to_string(pose.d_h_cm) +
                             " cm leaves the image");
                }
            }
        }
    }
}

}  // namespace

RingProjection project_ring_centers(const Pose& pose, const CameraSpec& cam,
                                    const LandmarkSpec& lm) {
    cam.validate();
    lm.validate();
    require_in_view(pose, cam, lm);

    const double cam_h = camera_height_cm(cam, lm);
    const double red_h = (lm.height_mm - lm.ring_height_mm / 2.0) / 10.0;
    const double blue_h = lm.ring_height_mm / 20.0;
    const double z = pose.d_v_cm;
    auto project = [&](double height_cm) {
        return PixelCoord{cam.focal_px * pose.d_h_cm / z + cam.cx(),
                          cam.focal_px * (cam_h - height_cm) / z + cam.cy()};
    };

    RingProjection p;
    p.red = project(red_h);
    p.blue = project(blue_h);
    p.L_px = std::hypot(p.blue.x - p.red.x, p.blue.y - p.red.y);
    p.d_h_px = (p.red.x + p.blue.x) / 2.0 - cam.cx();
    return p;
}

GroundTruth ground_truth(const Pose& pose, const CameraSpec& cam, const LandmarkSpec& lm) {
    const RingProjection p = project_ring_centers(pose, cam, lm);
    GroundTruth t;
    t.pose = pose;
    t.L_px = p.L_px;
    t.d_h_px = p.d_h_px;
    t.theta_deg = std::atan(pose.d_h_cm / pose.d_v_cm) * 180.0 / std::numbers::pi;
    t.d_cm = std::hypot(pose.d_v_cm, pose.d_h_cm);
    return t;
}

}  // namespace rbvision
