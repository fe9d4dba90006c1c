#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rbvision/error.hpp"
#include "rbvision/pipeline_config.hpp"

namespace rbvision {
namespace {

const std::set<std::string> kKnownKeys = {
    "filter",    "filter_window", "filter_sigma_space", "filter_sigma_color",
    "red_h_lo",  "red_h_hi",      "red_s_min",          "red_v_min",
    "blue_h_lo", "blue_h_hi",     "blue_s_min",         "blue_v_min",
    "min_blob_px", "model"};

void read_range(const nlohmann::json& j, const std::string& prefix, HsvRange& range) {
    range.h_lo = j.value(prefix + "_h_lo", range.h_lo);
    range.h_hi = j.value(prefix + "_h_hi", range.h_hi);
    range.s_min = j.value(prefix + "_s_min", range.s_min);
    range.v_min = j.value(prefix + "_v_min", range.v_min);
}

}  // namespace

PipelineConfig parse_pipeline_config(std::string_view json_text,
                                     const std::filesystem::path& base_dir) {
    PipelineConfig cfg;
    try {
        const auto j = nlohmann::json::parse(json_text);
        if (!j.is_object()) fail(ErrorKind::Format, "config must be a JSON object");
        for (const auto& item : j.items()) {
            if (!kKnownKeys.contains(item.key())) {
                fail(ErrorKind::Format, "unknown config key '" + item.key() + "'");
            }
        }

        const FilterKind kind = parse_filter_kind(j.value("filter", std::string("median")));
        const int window = j.value("filter_window", kDefaultMedianWindow);
        auto opt = [&](const char* key) -> std::optional<double> {
            if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
            return j.at(key).get<double>();
        };
        switch (kind) {
            case FilterKind::Median:
                cfg.segmentation.filter = FilterSpec::median(window);
                // Let validate() reject sigmas given for a median filter.
                cfg.segmentation.filter.sigma_space = opt("filter_sigma_space");
                cfg.segmentation.filter.sigma_color = opt("filter_sigma_color");
                break;
            case FilterKind::Gaussian:
                cfg.segmentation.filter = FilterSpec::gaussian(window, opt("filter_sigma_space"));
                cfg.segmentation.filter.sigma_color = opt("filter_sigma_color");
                break;
            case FilterKind::Bilateral:
                cfg.segmentation.filter = FilterSpec::bilateral(
                    window, opt("filter_sigma_space"), opt("filter_sigma_color"));
                break;
        }
        read_range(j, "red", cfg.segmentation.red);
        read_range(j, "blue", cfg.segmentation.blue);
        cfg.segmentation.min_blob_px = j.value("min_blob_px", cfg.segmentation.min_blob_px);
        if (j.contains("model") && !j.at("model").is_null()) {
            std::filesystem::path model = j.at("model").get<std::string>();
            cfg.model_path = model.is_relative() && !base_dir.empty() ? base_dir / model : model;
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Format, std::string("config JSON: ") + e.what());
    }
    cfg.segmentation.validate();
    return cfg;
}

PipelineConfig load_pipeline_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open config '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pipeline_config(buf.str(), path.parent_path());
}

}  // namespace rbvision
