#include <cmath>
#include <cstdio>

#include "../util/csv.hpp"
#include "rbvision/estimation.hpp"
#include "rbvision/evaluation.hpp"

namespace rbvision {
namespace {

const std::vector<ManifestRow>& require_manifest(const Datasheet& sheet,
                                                 const std::filesystem::path& path) {
    if (sheet.kind != DatasheetKind::Manifest) {
        fail(ErrorKind::Format, "'" + path.string() + "' is not a dataset manifest");
    }
    return sheet.manifest;
}

}  // namespace

EvalReport evaluate_dataset(const std::filesystem::path& manifest_path,
                            const SegmentationConfig& cfg, const CalibrationModel& model) {
    model.validate();
    if (!model.k_horiz) {
        fail(ErrorKind::Parameter, "evaluation needs a model with k_horiz");
    }
    const Datasheet sheet = load_datasheet(manifest_path);
    const auto dir = manifest_path.parent_path();
    const double span = 2.0 * model.bearing_abs_max;

    EvalReport report;
    for (const ManifestRow& truth : require_manifest(sheet, manifest_path)) {
        const auto image_path = dir / truth.filename;
        if (!std::filesystem::exists(image_path)) {
            report.skipped.push_back(truth.filename);
            continue;
        }
        try {
            const Estimate e = estimate(detect_rings(load_image(image_path), cfg), model);
            EvalRow row;
            row.filename = truth.filename;
            row.true_d_cm = truth.d_cm;
            row.est_d_cm = *e.d;
            row.range_err_pct = std::abs(*e.d - truth.d_cm) / truth.d_cm * 100.0;
            row.true_theta_deg = truth.theta_deg;
            row.est_theta_deg = *e.theta;
            row.bearing_err_deg = std::abs(*e.theta - truth.theta_deg);
            row.bearing_err_pct_span = row.bearing_err_deg / span * 100.0;
            report.rows.push_back(std::move(row));
        } catch (const Error& err) {
            report.failures.push_back({truth.filename, err.kind(), err.what()});
        }
    }

    if (!report.rows.empty()) {
        for (const EvalRow& row : report.rows) {
            report.mean_range_err_pct += row.range_err_pct;
            report.mean_bearing_err_deg += row.bearing_err_deg;
            report.mean_bearing_err_pct_span += row.bearing_err_pct_span;
        }
        const double n = static_cast<double>(report.rows.size());
        report.mean_range_err_pct /= n;
        report.mean_bearing_err_deg /= n;
        report.mean_bearing_err_pct_span /= n;
    }
    return report;
}

std::string eval_csv_line(const EvalRow& row) {
    std::string line = row.filename;
    for (const double v : {row.true_d_cm, row.est_d_cm, row.range_err_pct, row.true_theta_deg,
                           row.est_theta_deg, row.bearing_err_deg, row.bearing_err_pct_span}) {
        line += ',';
        line += csv::format_number(v);
    }
    return line;
}

std::string eval_summary_line(const EvalReport& report) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "summary: evaluated=%zu failed=%zu skipped=%zu mean_range_err_pct=%.4f "
                  "mean_bearing_err_deg=%.4f mean_bearing_err_pct_span=%.4f",
                  report.rows.size(), report.failures.size(), report.skipped.size(),
                  report.mean_range_err_pct, report.mean_bearing_err_deg,
                  report.mean_bearing_err_pct_span);
    return buf;
}

MeasuredSamples measure_dataset(const std::filesystem::path& manifest_path,
                                const SegmentationConfig& cfg) {
    const Datasheet sheet = load_datasheet(manifest_path);
    const auto dir = manifest_path.parent_path();

    MeasuredSamples out;
    for (const ManifestRow& truth : require_manifest(sheet, manifest_path)) {
        const auto image_path = dir / truth.filename;
        if (!std::filesystem::exists(image_path)) {
            out.skipped.push_back(truth.filename);
            continue;
        }
        const ImageRgb img = load_image(image_path);
        if (out.image_width == 0) {
            out.image_width = img.width();
            out.image_height = img.height();
        } else if (img.width() != out.image_width || img.height() != out.image_height) {
            fail(ErrorKind::Validation, "'" + truth.filename + "' differs in size from the "
                                        "first image of the dataset");
        }
        try {
            const RingDetection det = detect_rings(img, cfg);
            out.vertical.push_back({truth.d_v_cm, det.L});
            out.horizontal.push_back({truth.d_h_cm, det.d_h_px(), truth.d_v_cm});
        } catch (const Error& err) {
            if (!err.is_detection_failure()) throw;
            out.failures.push_back({truth.filename, err.kind(), err.what()});
        }
    }
    return out;
}

}  // namespace rbvision
