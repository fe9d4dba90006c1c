#pragma once

#include <optional>
#include <string>

#include "rbvision/segmentation.hpp"

namespace rbvision {

/// Constant of the reciprocal range law d_v = a_vert / L for the default rig.
inline constexpr double kDefaultAVert = 3500.0;
inline constexpr double kDefaultDvMinCm = 28.0;
inline constexpr double kDefaultDvMaxCm = 72.0;
inline constexpr double kDefaultBearingAbsMaxDeg = 25.0;

/// Fitted camera constants plus the trusted envelope.
///
/// The lateral law is d_h = k_horiz * d_h_px. When k_horiz_ref_dv is set,
/// k_horiz is the gain observed at that depth and the gain at depth d_v is
/// k_horiz * d_v / k_horiz_ref_dv (the pinhole scaling); without it the gain
/// is depth independent. A model without k_horiz cannot produce bearings.
struct CalibrationModel {
    double a_vert = kDefaultAVert;  // cm * px
    std::optional<double> k_horiz;  // cm / px
    std::optional<double> k_horiz_ref_dv;  // cm
    int image_width = 800;
    int image_height = 600;
    double d_v_min = kDefaultDvMinCm;
    double d_v_max = kDefaultDvMaxCm;
    double bearing_abs_max = kDefaultBearingAbsMaxDeg;  // degrees

    void validate() const;
};

struct Estimate {
    double d_v = 0.0;               // cm
    std::optional<double> d_h;      // cm, positive right
    std::optional<double> theta;    // degrees, sign of d_h
    std::optional<double> d;        // cm
    double L = 0.0;                 // px
    bool in_range = false;
    bool in_bearing = false;
};

double vertical_distance(double L_px, const CalibrationModel& model);

/// Literal lateral law: k_horiz * d_h_px.
double horizontal_distance(double d_h_px, const CalibrationModel& model);
/// Lateral law at depth d_v; applies the reference-depth scaling when the
/// model carries one.
double horizontal_distance(double d_h_px, const CalibrationModel& model, double d_v_cm);

double bearing_deg(double d_h_cm, double d_v_cm);
double range_cm(double d_v_cm, double theta_deg);

Estimate estimate(const RingDetection& detection, const CalibrationModel& model);

/// {"d_v_cm","d_h_cm","theta_deg","d_cm","L_px","in_range","in_bearing"};
/// absent bearing quantities serialize as null.
std::string to_json(const Estimate& e);

}  // namespace rbvision
