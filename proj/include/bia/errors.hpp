#pragma once

#include <stdexcept>
#include <string>

namespace bia {

enum class ErrorKind {
  InfeasibleParams,     // (K, r, mode) combination cannot be built
  DimensionMismatch,    // inputs from different parameter sets
  ConstructionIntegrity,// duplicate precoder columns or similar internal defect
  LemmaViolation,       // an independence/alignment property failed
  CensusMismatch,       // dimension census disagrees with its predicted counts
  ConverseViolation,    // a receiver dimension inequality exceeded the slot budget
  Decodability,         // desired signal space is not separable from interference
  InsufficientSnrSpan,  // slope fit preconditions not met
  Usage,                // bad arguments / unsupported combination
  Serialization,        // malformed input document
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InfeasibleParams: return "infeasible-params";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::ConstructionIntegrity: return "construction-integrity";
    case ErrorKind::LemmaViolation: return "property-violation";
    case ErrorKind::CensusMismatch: return "census-mismatch";
    case ErrorKind::ConverseViolation: return "converse-violation";
    case ErrorKind::Decodability: return "decodability";
    case ErrorKind::InsufficientSnrSpan: return "insufficient-snr-span";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Serialization: return "serialization";
  }
  return "unknown";
}

}  // namespace bia
