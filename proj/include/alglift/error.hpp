#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alglift {

/*
 * Every failure raised by the library carries a machine-readable code.
 * The CLI reports the code verbatim, so the strings below are part of the
 * external interface.
 */
enum class ErrorCode {
  ParseError,
  SchemaError,
  MalformedInput,
  ShapeMismatch,
  NotSaturated,
  NotABasis,
  DegreeOutOfRange,
  DegreeMismatch,
  NotClosed,
  NotAChainComplex,
  NotSimplyConnected,
  TrivialClass,
  SymbolProduct,
  SymbolMismatch,
  InvalidGroupAction,
  LinearlyDependent,
  AssumptionsFailed,
  CoefficientActionUndefined,
  NotASection,
  VerificationFailed,
  IoError,
};

constexpr std::string_view to_string(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotAChainComplex: return "NotAChainComplex";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::TrivialClass: return "TrivialClass";
    case ErrorCode::SymbolProduct: return "SymbolProduct";
    case ErrorCode::SymbolMismatch: return "SymbolMismatch";
    case ErrorCode::InvalidGroupAction: return "InvalidGroupAction";
    case ErrorCode::LinearlyDependent: return "LinearlyDependent";
    case ErrorCode::AssumptionsFailed: return "AssumptionsFailed";
    case ErrorCode::CoefficientActionUndefined: return "CoefficientActionUndefined";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace alglift
