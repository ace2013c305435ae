#include "cwave/errors.hpp"

namespace cwave {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EpsilonZero: return "EpsilonZero";
        case ErrorCode::DegenerateCubic: return "DegenerateCubic";
        case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
        case ErrorCode::PoleAtXi: return "PoleAtXi";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::Inadmissible: return "Inadmissible";
        case ErrorCode::ModulusOutOfRange: return "ModulusOutOfRange";
        case ErrorCode::NonPositiveDiscriminant: return "NonPositiveDiscriminant";
        case ErrorCode::CoincidentExtremeRoots: return "CoincidentExtremeRoots";
        case ErrorCode::PoleAtZero: return "PoleAtZero";
        case ErrorCode::ComplexZeta: return "ComplexZeta";
        case ErrorCode::ZeroAmplitude: return "ZeroAmplitude";
        case ErrorCode::FormUnavailable: return "FormUnavailable";
        case ErrorCode::AllPointsExcluded: return "AllPointsExcluded";
        case ErrorCode::GridTooCoarse: return "GridTooCoarse";
        case ErrorCode::UnstableStep: return "UnstableStep";
        case ErrorCode::BoundaryContamination: return "BoundaryContamination";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace cwave
