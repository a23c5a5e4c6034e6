#pragma once

#include <stdexcept>
#include <string>

namespace covres {

// Structured error codes; the CLI maps these onto exit codes and
// machine-readable error objects.
enum class ErrorCode {
  MissingDecoration,
  NotBlowDownable,
  BlowDownWouldCreateLoop,
  NotNegativeDefinite,
  NonIntegralMultiplicity,
  NoArrows,
  NonIntegralEuler,
  BadFraction,
  BadModel,
  InconsistentCoveringData,
  QHSRequired,
  GenusFormulaNonIntegral,
  DisconnectedCover,
  MoebiusNonIntegral,
  NegativeBlockCount,
  NegativeCyclotomicExponent,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MissingDecoration: return "MissingDecoration";
    case ErrorCode::NotBlowDownable: return "NotBlowDownable";
    case ErrorCode::BlowDownWouldCreateLoop: return "BlowDownWouldCreateLoop";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::NoArrows: return "NoArrows";
    case ErrorCode::NonIntegralEuler: return "NonIntegralEuler";
    case ErrorCode::BadFraction: return "BadFraction";
    case ErrorCode::BadModel: return "BadModel";
    case ErrorCode::InconsistentCoveringData: return "InconsistentCoveringData";
    case ErrorCode::QHSRequired: return "QHSRequired";
    case ErrorCode::GenusFormulaNonIntegral: return "GenusFormulaNonIntegral";
    case ErrorCode::DisconnectedCover: return "DisconnectedCover";
    case ErrorCode::MoebiusNonIntegral: return "MoebiusNonIntegral";
    case ErrorCode::NegativeBlockCount: return "NegativeBlockCount";
    case ErrorCode::NegativeCyclotomicExponent: return "NegativeCyclotomicExponent";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covres
