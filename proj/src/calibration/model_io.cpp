#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rbvision/calibration.hpp"
#include "rbvision/error.hpp"

namespace rbvision {

std::string model_to_json(const CalibrationModel& model) {
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    nlohmann::ordered_json j;
    j["a_vert"] = model.a_vert;
    j["k_horiz"] = opt(model.k_horiz);
    j["k_horiz_ref_dv"] = opt(model.k_horiz_ref_dv);
    j["image_width"] = model.image_width;
    j["image_height"] = model.image_height;
    j["d_v_min"] = model.d_v_min;
    j["d_v_max"] = model.d_v_max;
    j["bearing_abs_max"] = model.bearing_abs_max;
    return j.dump(2);
}

CalibrationModel model_from_json(std::string_view text) {
    CalibrationModel model;
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_object()) fail(ErrorKind::Format, "model JSON must be an object");
        model.a_vert = j.at("a_vert").get<double>();
        auto opt = [&](const char* key) -> std::optional<double> {
            if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
            return j.at(key).get<double>();
        };
        model.k_horiz = opt("k_horiz");
        model.k_horiz_ref_dv = opt("k_horiz_ref_dv");
        model.image_width = j.at("image_width").get<int>();
        model.image_height = j.at("image_height").get<int>();
        model.d_v_min = j.value("d_v_min", kDefaultDvMinCm);
        model.d_v_max = j.value("d_v_max", kDefaultDvMaxCm);
        model.bearing_abs_max = j.value("bearing_abs_max", kDefaultBearingAbsMaxDeg);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Format, std::string("model JSON: ") + e.what());
    }
    model.validate();
    return model;
}

void save_model(const CalibrationModel& model, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
    out << model_to_json(model) << '\n';
    if (!out) fail(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

CalibrationModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open model '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

}  // namespace rbvision
