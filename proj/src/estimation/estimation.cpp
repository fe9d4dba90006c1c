#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "rbvision/error.hpp"
#include "rbvision/estimation.hpp"

namespace rbvision {
namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void CalibrationModel::validate() const {
    if (!positive(a_vert)) fail(ErrorKind::Parameter, "a_vert must be > 0");
    if (k_horiz && !positive(*k_horiz)) fail(ErrorKind::Parameter, "k_horiz must be > 0");
    if (k_horiz_ref_dv && !positive(*k_horiz_ref_dv)) {
        fail(ErrorKind::Parameter, "k_horiz_ref_dv must be > 0");
    }
    if (k_horiz_ref_dv && !k_horiz) {
        fail(ErrorKind::Parameter, "k_horiz_ref_dv given without k_horiz");
    }
    if (image_width < 1 || image_height < 1) {
        fail(ErrorKind::Parameter, "model image dimensions must be >= 1");
    }
    if (!(positive(d_v_min) && d_v_min < d_v_max && std::isfinite(d_v_max))) {
        fail(ErrorKind::Parameter, "need 0 < d_v_min < d_v_max");
    }
    if (!(bearing_abs_max > 0.0 && bearing_abs_max < 90.0)) {
        fail(ErrorKind::Parameter, "bearing_abs_max must lie in (0, 90)");
    }
}

double vertical_distance(double L_px, const CalibrationModel& model) {
    if (!positive(L_px)) fail(ErrorKind::Parameter, "L must be > 0 px");
    return model.a_vert / L_px;
}

double horizontal_distance(double d_h_px, const CalibrationModel& model) {
    if (!model.k_horiz) fail(ErrorKind::Parameter, "model has no k_horiz");
    return *model.k_horiz * d_h_px;
}

double horizontal_distance(double d_h_px, const CalibrationModel& model, double d_v_cm) {
    const double literal = horizontal_distance(d_h_px, model);
    if (!model.k_horiz_ref_dv) return literal;
    return literal * d_v_cm / *model.k_horiz_ref_dv;
}

double bearing_deg(double d_h_cm, double d_v_cm) {
    if (!positive(d_v_cm)) fail(ErrorKind::Parameter, "d_v must be > 0 for a bearing");
    return std::atan(d_h_cm / d_v_cm) * kDegPerRad;
}

double range_cm(double d_v_cm, double theta_deg) {
    if (!positive(d_v_cm)) fail(ErrorKind::Parameter, "d_v must be > 0 for a range");
    if (!(std::abs(theta_deg) < 90.0)) fail(ErrorKind::Parameter, "|theta| must be < 90 deg");
    return d_v_cm / std::cos(theta_deg / kDegPerRad);
}

Estimate estimate(const RingDetection& detection, const CalibrationModel& model) {
    model.validate();
    if (detection.image_width != model.image_width ||
        detection.image_height != model.image_height) {
        fail(ErrorKind::ModelMismatch,
             "image is " + std::to_string(detection.image_width) + "x" +
                 std::to_string(detection.image_height) + ", model calibrated for " +
                 std::to_string(model.image_width) + "x" + std::to_string(model.image_height));
    }

    Estimate e;
    e.L = detection.L;
    e.d_v = vertical_distance(detection.L, model);
    e.in_range = e.d_v >= model.d_v_min && e.d_v <= model.d_v_max;
    if (model.k_horiz) {
        e.d_h = horizontal_distance(detection.d_h_px(), model, e.d_v);
        e.theta = bearing_deg(*e.d_h, e.d_v);
        e.d = range_cm(e.d_v, *e.theta);
        e.in_bearing = std::abs(*e.theta) <= model.bearing_abs_max;
    }
    return e;
}

std::string to_json(const Estimate& e) {
    auto opt = [](const std::optional<double>& v) -> nlohmann::json {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    nlohmann::ordered_json j;
    j["d_v_cm"] = e.d_v;
    j["d_h_cm"] = opt(e.d_h);
    j["theta_deg"] = opt(e.theta);
    j["d_cm"] = opt(e.d);
    j["L_px"] = e.L;
    j["in_range"] = e.in_range;
    j["in_bearing"] = e.in_bearing;
    return j.dump();
}

}  // namespace rbvision
