#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

enum class Errc {
  MedianViolation,
  WindowRequired,
  BudgetExceeded,
  DimensionViolation,
  InternalError,
  HellyViolation,
  PreconditionViolated,
  UnknownGenerator,
  NoInvariantCube,
  FilteringViolation,
  GenerationFailed,
  SizeExceeded,
  InvalidArguments,
  ParseError,
  Disconnected,
};

/// Library error; `code()` identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MedianViolation: return "MedianViolation";
    case Errc::WindowRequired: return "WindowRequired";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DimensionViolation: return "DimensionViolation";
    case Errc::InternalError: return "InternalError";
    case Errc::HellyViolation: return "HellyViolation";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::NoInvariantCube: return "NoInvariantCube";
    case Errc::FilteringViolation: return "FilteringViolation";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::InvalidArguments: return "InvalidArguments";
    case Errc::ParseError: return "ParseError";
    case Errc::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

}  // namespace ccx
