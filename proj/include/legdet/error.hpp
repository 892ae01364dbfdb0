#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legdet {

enum class Errc {
  kInvalidArgument,
  kNotPrime,
  kNonResidue,
  kZeroInput,
  kCongruenceMismatch,
  kSizeCap,
  kSymmetryViolation,
  kNotASquare,
  kNoRepresentation,
  kNotAUnit,
  kNotAPower,
  kNonIntegral,
  kSingularCurve,
  kDegenerateFamily,
};

std::string_view to_string(Errc code);

// Every precondition failure in the library surfaces as this exception; the
// code is the machine-readable part, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kNonResidue: return "NonResidue";
    case Errc::kZeroInput: return "ZeroInput";
    case Errc::kCongruenceMismatch: return "CongruenceMismatch";
    case Errc::kSizeCap: return "SizeCap";
    case Errc::kSymmetryViolation: return "SymmetryViolation";
    case Errc::kNotASquare: return "NotASquare";
    case Errc::kNoRepresentation: return "NoRepresentation";
    case Errc::kNotAUnit: return "NotAUnit";
    case Errc::kNotAPower: return "NotAPower";
    case Errc::kNonIntegral: return "NonIntegral";
    case Errc::kSingularCurve: return "SingularCurve";
    case Errc::kDegenerateFamily: return "DegenerateFamily";
  }
  return "Unknown";
}

}  // namespace legdet
