#pragma once

#include <stdexcept>
#include <string>

namespace hcc {

enum class ErrorCode {
  NonSquare,
  Asymmetric,
  NonFinite,
  EmptyInput,
  KOutOfRange,
  InvalidLevelKind,
  NotPsd,
  DimsTooLarge,
  DimensionMismatch,
  TooLarge,
  NotSigned,
  SizeMismatch,
  ParseError,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hcc
