#include "folia/error.hpp"

namespace folia {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DegenerateSingularLocus: return "DegenerateSingularLocus";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::PullbackUndefined: return "PullbackUndefined";
    case ErrorCode::EulerContractionNonzero: return "EulerContractionNonzero";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::AllLinesDegenerate: return "AllLinesDegenerate";
    case ErrorCode::MapImageInSingularLocus: return "MapImageInSingularLocus";
    case ErrorCode::NonReducedPencil: return "NonReducedPencil";
    case ErrorCode::NotSingularHere: return "NotSingularHere";
    case ErrorCode::DegenerateLinearPart: return "DegenerateLinearPart";
    case ErrorCode::MultiplePoint: return "MultiplePoint";
    case ErrorCode::NeedsFieldExtension: return "NeedsFieldExtension";
    case ErrorCode::MaxDepthExceeded: return "MaxDepthExceeded";
    case ErrorCode::ClosednessViolated: return "ClosednessViolated";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::ParamDomain: return "ParamDomain";
  }
  return "Unknown";
}

}  // namespace folia
