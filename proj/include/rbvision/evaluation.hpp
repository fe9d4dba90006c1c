#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rbvision/calibration.hpp"
#include "rbvision/error.hpp"
#include "rbvision/segmentation.hpp"

namespace rbvision {

struct EvalRow {
    std::string filename;
    double true_d_cm = 0.0;
    double est_d_cm = 0.0;
    double range_err_pct = 0.0;
    double true_theta_deg = 0.0;
    double est_theta_deg = 0.0;
    double bearing_err_deg = 0.0;
    double bearing_err_pct_span = 0.0;  // percent of 2 * bearing_abs_max
};

struct EvalFailure {
    std::string filename;
    ErrorKind kind;
    std::string message;
};

struct EvalReport {
    std::vector<EvalRow> rows;          // manifest order
    std::vector<EvalFailure> failures;  // detection or estimation errors
    std::vector<std::string> skipped;   // images missing on disk
    double mean_range_err_pct = 0.0;
    double mean_bearing_err_deg = 0.0;
    double mean_bearing_err_pct_span = 0.0;
};

inline constexpr const char* kEvalCsvHeader =
    "filename,true_d_cm,est_d_cm,range_err_pct,true_theta_deg,est_theta_deg,"
    "bearing_err_deg,bearing_err_pct_span";

/// Runs the full pipeline on every manifest image (paths relative to the
/// manifest's directory) and scores it against the recorded truth. The
/// model must carry k_horiz.
EvalReport evaluate_dataset(const std::filesystem::path& manifest_path,
                            const SegmentationConfig& cfg, const CalibrationModel& model);

std::string eval_csv_line(const EvalRow& row);
std::string eval_summary_line(const EvalReport& report);

/// Calibration samples measured by the detection pipeline on a manifest's
/// images, paired with the manifest's ground-truth distances.
struct MeasuredSamples {
    std::vector<VerticalSample> vertical;
    std::vector<HorizontalSample> horizontal;  // carry d_v_cm
    int image_width = 0;
    int image_height = 0;
    std::vector<EvalFailure> failures;
    std::vector<std::string> skipped;
};

MeasuredSamples measure_dataset(const std::filesystem::path& manifest_path,
                                const SegmentationConfig& cfg);

}  // namespace rbvision
