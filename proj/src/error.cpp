#include "slinv/error.hpp"

namespace slinv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DanglingHalfEdge: return "DanglingHalfEdge";
    case ErrorCode::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::EndpointsDiffer: return "EndpointsDiffer";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonMonomialDenominator: return "NonMonomialDenominator";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BadSlot: return "BadSlot";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::NotFourValent: return "NotFourValent";
    case ErrorCode::NotCheckerboardColorable: return "NotCheckerboardColorable";
    case ErrorCode::CrossingCapExceeded: return "CrossingCapExceeded";
    case ErrorCode::EdgeCapExceeded: return "EdgeCapExceeded";
    case ErrorCode::NotTrivialLoop: return "NotTrivialLoop";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::GenusZero: return "GenusZero";
  }
  return "Unknown";
}

}  // namespace slinv
