#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "rbvision/estimation.hpp"

namespace rbvision {

struct VerticalSample {
    double d_v_cm = 0.0;
    double L_px = 0.0;
};

struct HorizontalSample {
    double d_h_cm = 0.0;
    double d_h_px = 0.0;
    /// Depth at which the sample was taken, when the datasheet records it.
    std::optional<double> d_v_cm;
};

struct FitReport {
    double constant = 0.0;
    double rmse = 0.0;  // cm
    std::size_t n = 0;
    double max_abs_residual = 0.0;  // cm
};

/// Through-origin least squares on d_v = a * (1/L). Residuals are in d_v.
FitReport fit_vertical(std::span<const VerticalSample> samples);

/// Through-origin least squares on d_h_cm = k * d_h_px.
FitReport fit_horizontal(std::span<const HorizontalSample> samples);

/// Through-origin least squares on d_h_cm = k * (d_h_px * d_v / ref_dv):
/// the lateral gain quoted at ref_dv. Every sample must carry d_v_cm.
FitReport fit_horizontal_at_depth(std::span<const HorizontalSample> samples, double ref_dv_cm);

enum class DatasheetKind {
    Vertical,             // d_v_cm,L_px
    Horizontal,           // d_h_cm,d_h_px
    HorizontalWithDepth,  // d_v_cm,d_h_cm,d_h_px
    Manifest,             // filename,d_v_cm,d_h_cm,theta_deg,d_cm,L_px,d_h_px
};

struct ManifestRow {
    std::string filename;
    double d_v_cm = 0.0;
    double d_h_cm = 0.0;
    double theta_deg = 0.0;
    double d_cm = 0.0;
    double L_px = 0.0;
    double d_h_px = 0.0;
};

struct Datasheet {
    DatasheetKind kind = DatasheetKind::Vertical;
    std::vector<VerticalSample> vertical;
    std::vector<HorizontalSample> horizontal;
    std::vector<ManifestRow> manifest;  // only for DatasheetKind::Manifest
};

inline constexpr const char* kManifestHeader = "filename,d_v_cm,d_h_cm,theta_deg,d_cm,L_px,d_h_px";

/// Parses a datasheet CSV; the header row selects the kind. Rows that
/// violate sample invariants are rejected with their 1-based line numbers.
Datasheet load_datasheet(const std::filesystem::path& path);
Datasheet parse_datasheet(std::string_view text);

/// Model JSON: {"a_vert","k_horiz","k_horiz_ref_dv","image_width",
/// "image_height","d_v_min","d_v_max","bearing_abs_max"}.
std::string model_to_json(const CalibrationModel& model);
CalibrationModel model_from_json(std::string_view text);
void save_model(const CalibrationModel& model, const std::filesystem::path& path);
CalibrationModel load_model(const std::filesystem::path& path);

}  // namespace rbvision
