#pragma once

#include <stdexcept>
#include <string>

namespace hopfjordan {

// Failure categories surfaced by library operations. The CLI maps
// DomainError to exit code 1 and ParseError to exit code 2.
enum class ErrorKind {
  UnsupportedSize,         // dimension or order over the desk-scale cap
  SingularInput,           // matrix required to be invertible is not
  IllConditionedSpectrum,  // eigenvalue clusters cannot be separated
  SingularEigenvalue,      // m-th root requested at lambda = 0
  ContractViolation,       // argument violates a stated precondition
  ShapeMismatch,           // incompatible dimensions
  NotFinite,               // generated closure exceeded its cap
  NotNormal,               // quotient by a non-normal subgroup
  NonCentral,              // operation requires a trivial action sign
  HypothesisViolation,     // inputs fail a theorem hypothesis
  ModelInconsistency,      // internal certificate of a model failed
  InfiniteQuotient,        // coset enumeration exceeded quotient_cap
  IllConditionedModel,     // |det g| too close to 1 for coset detection
  InvalidModel,            // a validation certificate failed
  CertificationFailure,    // two independent computations disagree
};

const char* to_string(ErrorKind kind);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed input file; `path` locates the offending node, JSON-pointer style.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace hopfjordan
