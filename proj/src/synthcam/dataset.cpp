#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "../util/csv.hpp"
#include "rbvision/error.hpp"
#include "rbvision/synthcam.hpp"

namespace rbvision {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Inclusive arithmetic sequence; steps are counted, not accumulated, so
// 28 + 11 * 4 lands exactly on 72.
std::vector<double> sequence(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) fail(ErrorKind::Parameter, "bad grid range");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo + static_cast<double>(i) * step;
    return out;
}

}  // namespace

std::uint64_t pose_seed(std::uint64_t base_seed, std::size_t index) {
    return splitmix64(splitmix64(base_seed) ^ static_cast<std::uint64_t>(index));
}

std::vector<Pose> make_grid(double d_v_min, double d_v_max, double d_v_step,
                            double theta_min, double theta_max, double theta_step) {
    std::vector<Pose> grid;
    for (const double d_v : sequence(d_v_min, d_v_max, d_v_step)) {
        for (const double theta : sequence(theta_min, theta_max, theta_step)) {
            grid.push_back({d_v, d_v * std::tan(theta * std::numbers::pi / 180.0)});
        }
    }
    return grid;
}

std::vector<Pose> standard_grid() { return make_grid(28.0, 72.0, 4.0, -25.0, 25.0, 5.0); }

std::string manifest_line(const std::string& filename, const GroundTruth& t) {
    std::string line = filename;
    for (const double v : {t.pose.d_v_cm, t.pose.d_h_cm, t.theta_deg, t.d_cm, t.L_px, t.d_h_px}) {
        line += ',';
        line += csv::format_number(v);
    }
    return line;
}

std::vector<ManifestRow> generate_dataset(std::span<const Pose> grid, const CameraSpec& cam,
                                          const LandmarkSpec& lm,
                                          const std::filesystem::path& out_dir,
                                          const DatasetOptions& opts) {
    if (grid.empty()) fail(ErrorKind::Parameter, "dataset grid is empty");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) fail(ErrorKind::Io, "cannot create '" + out_dir.string() + "': " + ec.message());

    // Validate every pose before writing anything.
    std::vector<GroundTruth> truths;
    truths.reserve(grid.size());
    for (const Pose& pose : grid) truths.push_back(ground_truth(pose, cam, lm));

    const auto manifest_path = out_dir / "manifest.csv";
    std::ofstream manifest(manifest_path, std::ios::trunc);
    if (!manifest) fail(ErrorKind::Io, "cannot open '" + manifest_path.string() + "'");
    manifest << kManifestHeader << '\n';

    std::vector<ManifestRow> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "pose_%04zu.ppm", i);
        RenderOptions ro = opts.render;
        ro.seed = pose_seed(opts.base_seed, i);
        save_image(render(grid[i], cam, lm, ro), out_dir / name);

        const GroundTruth& t = truths[i];
        manifest << manifest_line(name, t) << '\n';
        rows.push_back({name, t.pose.d_v_cm, t.pose.d_h_cm, t.theta_deg, t.d_cm, t.L_px,
                        t.d_h_px});
    }
    manifest.flush();
    if (!manifest) fail(ErrorKind::Io, "write failed for '" + manifest_path.string() + "'");
    return rows;
}

}  // namespace rbvision
