#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace folia {

enum class ErrorCode {
  InvalidInput,
  DegenerateSingularLocus,
  UnsupportedDegree,
  PullbackUndefined,
  EulerContractionNonzero,
  NotIntegrable,
  MixedDegrees,
  AllLinesDegenerate,
  MapImageInSingularLocus,
  NonReducedPencil,
  NotSingularHere,
  DegenerateLinearPart,
  MultiplePoint,
  NeedsFieldExtension,
  MaxDepthExceeded,
  ClosednessViolated,
  ZeroForm,
  ParamDomain,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this type. `details` carries
// structured payload where an operation has one (e.g. obstruction polynomials).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::string> details = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<std::string> details_;
};

}  // namespace folia
