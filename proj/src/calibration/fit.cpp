#include <algorithm>
#include <cmath>
#include <string>

#include "rbvision/calibration.hpp"
#include "rbvision/error.hpp"

namespace rbvision {
namespace {

void require_count(std::size_t n) {
    if (n < 2) {
        fail(ErrorKind::InsufficientData,
             "need at least 2 samples, got " + std::to_string(n));
    }
}

// Fits y = k * x through the origin and reports residuals in y.
template <typename XY>
FitReport fit_through_origin(std::size_t n, XY xy) {
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [x, y] = xy(i);
        sxy += x * y;
        sxx += x * x;
    }
    if (!(sxx > 0.0)) fail(ErrorKind::DegenerateFit, "regressor is zero for every sample");

    FitReport report;
    report.constant = sxy / sxx;
    report.n = n;
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [x, y] = xy(i);
        const double r = y - report.constant * x;
        sq += r * r;
        report.max_abs_residual = std::max(report.max_abs_residual, std::abs(r));
    }
    report.rmse = std::sqrt(sq / static_cast<double>(n));
    return report;
}

}  // namespace

FitReport fit_vertical(std::span<const VerticalSample> samples) {
    require_count(samples.size());
    for (const auto& s : samples) {
        if (!(s.L_px > 0.0) || !(s.d_v_cm > 0.0)) {
            fail(ErrorKind::Validation, "vertical samples need d_v > 0 and L > 0");
        }
    }
    return fit_through_origin(samples.size(), [&](std::size_t i) {
        return std::pair{1.0 / samples[i].L_px, samples[i].d_v_cm};
    });
}

FitReport fit_horizontal(std::span<const HorizontalSample> samples) {
    require_count(samples.size());
    return fit_through_origin(samples.size(), [&](std::size_t i) {
        return std::pair{samples[i].d_h_px, samples[i].d_h_cm};
    });
}

FitReport fit_horizontal_at_depth(std::span<const HorizontalSample> samples, double ref_dv_cm) {
    require_count(samples.size());
    if (!(ref_dv_cm > 0.0)) fail(ErrorKind::Parameter, "reference depth must be > 0");
    for (const auto& s : samples) {
        if (!s.d_v_cm || !(*s.d_v_cm > 0.0)) {
            fail(ErrorKind::Validation, "depth-scaled fit needs d_v > 0 on every sample");
        }
    }
    return fit_through_origin(samples.size(), [&](std::size_t i) {
        return std::pair{samples[i].d_h_px * *samples[i].d_v_cm / ref_dv_cm, samples[i].d_h_cm};
    });
}

}  // namespace rbvision
