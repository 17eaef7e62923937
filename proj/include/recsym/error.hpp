#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace recsym {

enum class Errc {
  BackendMismatch,
  SqrtNotExact,
  DivisionByZero,
  VectorResidueNonzero,
  SuperluminalVelocity,
  NotAUnitBoost,
  IndexOutOfRange,
  ZeroMomentum,
  DegenerateFrame,
  UnknownIdentity,
  UnknownProperty,
  InvalidArgument,
  ParseError,
  ArityError,
  TypeError,
  UnboundVariable,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::BackendMismatch: return "BackendMismatch";
    case Errc::SqrtNotExact: return "SqrtNotExact";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::VectorResidueNonzero: return "VectorResidueNonzero";
    case Errc::SuperluminalVelocity: return "SuperluminalVelocity";
    case Errc::NotAUnitBoost: return "NotAUnitBoost";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroMomentum: return "ZeroMomentum";
    case Errc::DegenerateFrame: return "DegenerateFrame";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::ArityError: return "ArityError";
    case Errc::TypeError: return "TypeError";
    case Errc::UnboundVariable: return "UnboundVariable";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message is prefixed with the
/// error name so it reads well when surfaced through the CLI or Python.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code), detail_(detail) {}

  Errc code() const noexcept { return code_; }
  /// Message without the leading error name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace recsym
