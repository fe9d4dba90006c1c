#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rbvision/app.hpp"
#include "rbvision/calibration.hpp"
#include "rbvision/evaluation.hpp"
#include "rbvision/pipeline_config.hpp"
#include "rbvision/synthcam.hpp"

namespace rbvision::app {
namespace {

struct CameraArgs {
    double focal = 700.0;
    int width = 800;
    int height = 600;
    std::optional<double> cam_height;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--focal", focal, "Focal length in pixels")->capture_default_str();
        cmd->add_option("--width", width, "Image width in pixels")->capture_default_str();
        cmd->add_option("--height", height, "Image height in pixels")->capture_default_str();
        cmd->add_option("--cam-height", cam_height,
                        "Optical axis height above ground in cm (default: landmark mid-height)");
    }
    CameraSpec spec() const {
        CameraSpec cam;
        cam.focal_px = focal;
        cam.image_width = width;
        cam.image_height = height;
        cam.height_cm = cam_height;
        return cam;
    }
};

Rgb parse_rgb(const std::string& text) {
    std::istringstream in(text);
    int c[3];
    char sep1 = 0, sep2 = 0;
    if (!(in >> c[0] >> sep1 >> c[1] >> sep2 >> c[2]) || sep1 != ',' || sep2 != ',' ||
        !in.eof()) {
        fail(ErrorKind::Parameter, "colour must be R,G,B, got '" + text + "'");
    }
    for (int v : c) {
        if (v < 0 || v > 255) fail(ErrorKind::Parameter, "colour channel out of 0-255");
    }
    return {static_cast<std::uint8_t>(c[0]), static_cast<std::uint8_t>(c[1]),
            static_cast<std::uint8_t>(c[2])};
}

PipelineConfig config_or_default(const std::string& path) {
    return path.empty() ? PipelineConfig{} : load_pipeline_config(path);
}

CalibrationModel resolve_model(const PipelineConfig& cfg, const std::string& override_path) {
    if (!override_path.empty()) return load_model(override_path);
    if (cfg.model_path) return load_model(*cfg.model_path);
    return CalibrationModel{};
}

struct EstimateArgs {
    std::string image;
    std::string config;
    std::string model;
};

int cmd_estimate(const EstimateArgs& a, std::ostream& out) {
    const PipelineConfig cfg = config_or_default(a.config);
    const CalibrationModel model = resolve_model(cfg, a.model);
    const ImageRgb img = load_image(a.image);
    out << to_json(estimate(detect_rings(img, cfg.segmentation), model)) << '\n';
    return 0;
}

struct CalibrateArgs {
    std::vector<std::string> datasheets;
    std::string out;
    bool measure = false;
    std::string config;
    double ref_dv = (kDefaultDvMinCm + kDefaultDvMaxCm) / 2.0;
    std::optional<int> image_width;
    std::optional<int> image_height;
};

void print_fit(std::ostream& out, const char* label, const char* name, const FitReport& r) {
    out << label << ": " << name << '=' << r.constant << " rmse_cm=" << r.rmse << " n=" << r.n
        << " max_abs_residual_cm=" << r.max_abs_residual << '\n';
}

int cmd_calibrate(const CalibrateArgs& a, std::ostream& out, std::ostream& err) {
    const PipelineConfig cfg = config_or_default(a.config);
    std::vector<VerticalSample> vertical;
    std::vector<HorizontalSample> horizontal;
    CalibrationModel model;

    for (const auto& path : a.datasheets) {
        const Datasheet sheet = load_datasheet(path);
        if (a.measure && sheet.kind == DatasheetKind::Manifest) {
            const MeasuredSamples m = measure_dataset(path, cfg.segmentation);
            for (const auto& f : m.failures) err << "detection failed: " << f.filename << " ("
                                                 << to_string(f.kind) << ")\n";
            for (const auto& s : m.skipped) err << "missing image: " << s << '\n';
            vertical.insert(vertical.end(), m.vertical.begin(), m.vertical.end());
            horizontal.insert(horizontal.end(), m.horizontal.begin(), m.horizontal.end());
            if (m.image_width > 0) {
                model.image_width = m.image_width;
                model.image_height = m.image_height;
            }
        } else {
            vertical.insert(vertical.end(), sheet.vertical.begin(), sheet.vertical.end());
            horizontal.insert(horizontal.end(), sheet.horizontal.begin(), sheet.horizontal.end());
        }
    }
    if (a.image_width) model.image_width = *a.image_width;
    if (a.image_height) model.image_height = *a.image_height;

    const FitReport vfit = fit_vertical(vertical);
    model.a_vert = vfit.constant;
    print_fit(out, "vertical", "a_vert", vfit);

    if (horizontal.empty()) {
        out << "horizontal: absent (bearing disabled)\n";
    } else {
        const bool with_depth = std::all_of(horizontal.begin(), horizontal.end(),
                                            [](const auto& s) { return s.d_v_cm.has_value(); });
        const FitReport hfit = with_depth ? fit_horizontal_at_depth(horizontal, a.ref_dv)
                                          : fit_horizontal(horizontal);
        model.k_horiz = hfit.constant;
        if (with_depth) model.k_horiz_ref_dv = a.ref_dv;
        print_fit(out, "horizontal", "k_horiz", hfit);
        if (with_depth) out << "horizontal: k_horiz_ref_dv=" << a.ref_dv << '\n';
    }
    model.validate();
    save_model(model, a.out);
    return 0;
}

struct RenderArgs {
    double d_v = 0.0;
    double d_h = 0.0;
    CameraArgs camera;
    double noise = 0.0;
    std::uint64_t seed = 1;
    std::string background = "180,180,180";
    std::string out;
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
    const CameraSpec cam = a.camera.spec();
    const LandmarkSpec lm;
    const Pose pose{a.d_v, a.d_h};
    RenderOptions ro;
    ro.background = parse_rgb(a.background);
    ro.noise_sigma = a.noise;
    ro.seed = a.seed;
    if (a.noise < 0.0) fail(ErrorKind::Parameter, "--noise must be >= 0");
    const GroundTruth truth = ground_truth(pose, cam, lm);
    save_image(render(pose, cam, lm, ro), a.out);
    out << manifest_line(std::filesystem::path(a.out).filename().string(), truth) << '\n';
    return 0;
}

struct GenerateArgs {
    std::string out_dir;
    CameraArgs camera;
    double noise = 0.0;
    std::uint64_t seed = 1;
    std::string background = "180,180,180";
    double dv_min = 28, dv_max = 72, dv_step = 4;
    double theta_min = -25, theta_max = 25, theta_step = 5;
};

int cmd_generate(const GenerateArgs& a, std::ostream& err) {
    if (a.noise < 0.0) fail(ErrorKind::Parameter, "--noise must be >= 0");
    const auto grid =
        make_grid(a.dv_min, a.dv_max, a.dv_step, a.theta_min, a.theta_max, a.theta_step);
    DatasetOptions opts;
    opts.render.background = parse_rgb(a.background);
    opts.render.noise_sigma = a.noise;
    opts.base_seed = a.seed;
    const auto rows = generate_dataset(grid, a.camera.spec(), LandmarkSpec{}, a.out_dir, opts);
    err << "wrote " << rows.size() << " images and manifest.csv to " << a.out_dir << '\n';
    return 0;
}

struct EvalArgs {
    std::string manifest;
    std::string config;
    std::string model;
    std::string summary_json;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    const PipelineConfig cfg = config_or_default(a.config);
    const CalibrationModel model = resolve_model(cfg, a.model);
    const EvalReport report = evaluate_dataset(a.manifest, cfg.segmentation, model);

    out << kEvalCsvHeader << '\n';
    for (const EvalRow& row : report.rows) out << eval_csv_line(row) << '\n';
    for (const auto& f : report.failures) {
        err << "failed: " << f.filename << " (" << to_string(f.kind) << ")\n";
    }
    for (const auto& s : report.skipped) err << "skipped: " << s << " (missing)\n";
    err << eval_summary_line(report) << '\n';

    if (!a.summary_json.empty()) {
        std::ofstream js(a.summary_json, std::ios::trunc);
        if (!js) fail(ErrorKind::Io, "cannot open '" + a.summary_json + "'");
        js << "{\"evaluated\":" << report.rows.size() << ",\"failed\":" << report.failures.size()
           << ",\"skipped\":" << report.skipped.size()
           << ",\"mean_range_err_pct\":" << report.mean_range_err_pct
           << ",\"mean_bearing_err_deg\":" << report.mean_bearing_err_deg
           << ",\"mean_bearing_err_pct_span\":" << report.mean_bearing_err_pct_span << "}\n";
    }
    return 0;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NoRedRegion:
        case ErrorKind::NoBlueRegion:
        case ErrorKind::GeometryInverted:
        case ErrorKind::DegenerateDetection:
            return 2;
        case ErrorKind::ModelMismatch:
            return 3;
        default:
            return 1;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App cli{"Monocular range and bearing estimation from a red/blue ring landmark",
                 "rbvision"};
    cli.require_subcommand(1);

    EstimateArgs est;
    auto* estimate_cmd = cli.add_subcommand("estimate", "Estimate range and bearing from an image");
    estimate_cmd->add_option("image", est.image, "PPM or PNG image")->required();
    estimate_cmd->add_option("--config", est.config, "Pipeline config JSON");
    estimate_cmd->add_option("--model", est.model, "Calibration model JSON (overrides config)");

    CalibrateArgs cal;
    auto* calibrate_cmd = cli.add_subcommand("calibrate", "Fit model constants from datasheets");
    calibrate_cmd->add_option("datasheets", cal.datasheets, "Datasheet or manifest CSV files")
        ->required();
    calibrate_cmd->add_option("--out", cal.out, "Model JSON to write")->required();
    calibrate_cmd->add_flag("--measure", cal.measure,
                            "Measure L and d_h_px from manifest images instead of "
                            "using the recorded values");
    calibrate_cmd->add_option("--config", cal.config, "Pipeline config JSON (for --measure)");
    calibrate_cmd->add_option("--ref-dv", cal.ref_dv,
                              "Reference depth in cm for depth-scaled lateral fits")
        ->capture_default_str();
    calibrate_cmd->add_option("--image-width", cal.image_width, "Calibrated image width");
    calibrate_cmd->add_option("--image-height", cal.image_height, "Calibrated image height");

    RenderArgs ren;
    auto* render_cmd = cli.add_subcommand("render", "Render one synthetic landmark image");
    render_cmd->add_option("--dv", ren.d_v, "Forward distance to the landmark in cm")->required();
    render_cmd->add_option("--dh", ren.d_h, "Lateral offset in cm, positive right")
        ->capture_default_str();
    ren.camera.add_to(render_cmd);
    render_cmd->add_option("--noise", ren.noise, "Gaussian noise sigma")->capture_default_str();
    render_cmd->add_option("--seed", ren.seed, "Noise seed")->capture_default_str();
    render_cmd->add_option("--background", ren.background, "Background colour R,G,B")
        ->capture_default_str();
    render_cmd->add_option("--out", ren.out, "Output PPM path")->required();

    GenerateArgs gen;
    auto* generate_cmd = cli.add_subcommand("generate", "Render a pose grid plus manifest.csv");
    generate_cmd->add_option("--out-dir", gen.out_dir, "Output directory")->required();
    gen.camera.add_to(generate_cmd);
    generate_cmd->add_option("--noise", gen.noise, "Gaussian noise sigma")->capture_default_str();
    generate_cmd->add_option("--seed", gen.seed, "Base noise seed")->capture_default_str();
    generate_cmd->add_option("--background", gen.background, "Background colour R,G,B")
        ->capture_default_str();
    generate_cmd->add_option("--dv-min", gen.dv_min)->capture_default_str();
    generate_cmd->add_option("--dv-max", gen.dv_max)->capture_default_str();
    generate_cmd->add_option("--dv-step", gen.dv_step)->capture_default_str();
    generate_cmd->add_option("--theta-min", gen.theta_min)->capture_default_str();
    generate_cmd->add_option("--theta-max", gen.theta_max)->capture_default_str();
    generate_cmd->add_option("--theta-step", gen.theta_step)->capture_default_str();

    EvalArgs ev;
    auto* eval_cmd = cli.add_subcommand("eval", "Score the pipeline on a generated dataset");
    eval_cmd->add_option("manifest", ev.manifest, "Dataset manifest.csv")->required();
    eval_cmd->add_option("--config", ev.config, "Pipeline config JSON");
    eval_cmd->add_option("--model", ev.model, "Calibration model JSON (overrides config)");
    eval_cmd->add_option("--summary-json", ev.summary_json, "Also write the summary as JSON");

    std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        cli.parse(rest);
    } catch (const CLI::ParseError& e) {
        return cli.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        if (*estimate_cmd) return cmd_estimate(est, out);
        if (*calibrate_cmd) return cmd_calibrate(cal, out, err);
        if (*render_cmd) return cmd_render(ren, out);
        if (*generate_cmd) return cmd_generate(gen, err);
        if (*eval_cmd) return cmd_eval(ev, out, err);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace rbvision::app
