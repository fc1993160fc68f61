#pragma once

#include <stdexcept>
#include <string>

namespace slinv {

enum class ErrorCode {
  // ribbon
  NotInvolution,
  Disconnected,
  DanglingHalfEdge,
  NonIntegerGenus,
  ContextMismatch,
  NotALoop,
  EndpointsDiffer,
  // text formats
  ParseError,
  // poly
  NonMonomialDenominator,
  ZeroPolynomial,
  // diagram
  BadSlot,
  InconsistentOrientation,
  NotFourValent,
  NotCheckerboardColorable,
  CrossingCapExceeded,
  // invariants
  EdgeCapExceeded,
  NotTrivialLoop,
  HypothesisViolated,
  NotAlternating,
  NotReduced,
  GenusZero,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace slinv
