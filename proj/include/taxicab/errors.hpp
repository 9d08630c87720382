#pragma once

#include <stdexcept>
#include <string>

namespace taxicab {

enum class ErrorCode {
  kParse,
  kZeroDenominator,
  kCoincidentPoints,
  kIdenticalLines,
  kZeroVector,
  kZeroComponent,
  kDegenerateCone,
  kNonPositiveKappa,
  kHorizontalPlane,
  kHorizontalLineWithHorizontalPlane,
  kNotSteep,
  kNotParallel,
  kNoSignChange,
  kInconsistentClassification,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

class geometry_error : public std::runtime_error {
 public:
  geometry_error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace taxicab
