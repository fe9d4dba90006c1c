#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rbvision {

enum class ErrorKind {
    Io,
    Format,
    Parse,
    Parameter,
    Validation,
    NoRedRegion,
    NoBlueRegion,
    GeometryInverted,
    DegenerateDetection,
    ModelMismatch,
    InsufficientData,
    DegenerateFit,
    OutOfView,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure the toolkit reports. The kind selects
/// the CLI exit code; the message carries the human-readable context.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for the four detect_rings failure kinds.
    bool is_detection_failure() const noexcept;

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace rbvision
