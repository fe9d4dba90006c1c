#include "rbvision/error.hpp"

namespace rbvision {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Io: return "IoError";
        case ErrorKind::Format: return "FormatError";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Parameter: return "ParameterError";
        case ErrorKind::Validation: return "ValidationError";
        case ErrorKind::NoRedRegion: return "NoRedRegion";
        case ErrorKind::NoBlueRegion: return "NoBlueRegion";
        case ErrorKind::GeometryInverted: return "GeometryInverted";
        case ErrorKind::DegenerateDetection: return "DegenerateDetection";
        case ErrorKind::ModelMismatch: return "ModelMismatch";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::DegenerateFit: return "DegenerateFit";
        case ErrorKind::OutOfView: return "OutOfView";
    }
    return "Error";
}

bool Error::is_detection_failure() const noexcept {
    switch (kind_) {
        case ErrorKind::NoRedRegion:
        case ErrorKind::NoBlueRegion:
        case ErrorKind::GeometryInverted:
        case ErrorKind::DegenerateDetection:
            return true;
        default:
            return false;
    }
}

void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace rbvision
