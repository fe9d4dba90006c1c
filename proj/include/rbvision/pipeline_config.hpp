#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "rbvision/segmentation.hpp"

namespace rbvision {

/// Operator configuration: one flat JSON object, every key optional.
///
///   filter, filter_window, filter_sigma_space, filter_sigma_color,
///   red_h_lo, red_h_hi, red_s_min, red_v_min,
///   blue_h_lo, blue_h_hi, blue_s_min, blue_v_min,
///   min_blob_px, model
///
/// A relative "model" path is resolved against the config file's directory.
struct PipelineConfig {
    SegmentationConfig segmentation;
    std::optional<std::filesystem::path> model_path;
};

PipelineConfig parse_pipeline_config(std::string_view json_text,
                                     const std::filesystem::path& base_dir = {});
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

}  // namespace rbvision
