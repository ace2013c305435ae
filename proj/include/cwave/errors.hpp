#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cwave {

enum class ErrorCode {
    EpsilonZero,
    DegenerateCubic,
    NegativeDiscriminant,
    PoleAtXi,
    PoleAtPoint,
    Inadmissible,
    ModulusOutOfRange,
    NonPositiveDiscriminant,
    CoincidentExtremeRoots,
    PoleAtZero,
    ComplexZeta,
    ZeroAmplitude,
    FormUnavailable,
    AllPointsExcluded,
    GridTooCoarse,
    UnstableStep,
    BoundaryContamination,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library error. Carries a machine-readable code and, for pole errors,
/// the offending location in traveling-wave coordinates.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what,
          std::optional<double> location = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code), location_(location) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<double> location() const noexcept { return location_; }

private:
    ErrorCode code_;
    std::optional<double> location_;
};

}  // namespace cwave
