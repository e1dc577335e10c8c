#pragma once

#include <stdexcept>
#include <string>

namespace spcsp {

enum class ErrorCode {
  InvalidInput = 1,
  OutOfRangeWeight,
  EmptyStrictRelation,
  NoPromiseHomomorphism,
  InvalidInstance,
  InvalidArity,
  ArityMismatch,
  ArityTooLarge,
  NotARelaxation,
  ArityUnderflow,
  DegenerateChain,
  ShapeMismatch,
  NoSmallFixingSet,
  SanityCheckFailed,
  NotTractable,
  NoInstance,
  TooLarge,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spcsp
