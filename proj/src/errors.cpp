#include "hopfjordan/errors.hpp"

namespace hopfjordan {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedSize: return "unsupported-size";
    case ErrorKind::SingularInput: return "singular-input";
    case ErrorKind::IllConditionedSpectrum: return "ill-conditioned-spectrum";
    case ErrorKind::SingularEigenvalue: return "singular-eigenvalue";
    case ErrorKind::ContractViolation: return "contract-violation";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::NotFinite: return "not-finite";
    case ErrorKind::NotNormal: return "not-normal";
    case ErrorKind::NonCentral: return "non-central";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::ModelInconsistency: return "model-inconsistency";
    case ErrorKind::InfiniteQuotient: return "infinite-quotient";
    case ErrorKind::IllConditionedModel: return "ill-conditioned-model";
    case ErrorKind::InvalidModel: return "invalid-model";
    case ErrorKind::CertificationFailure: return "certification-failure";
  }
  return "unknown";
}

DomainError::DomainError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::string path, const std::string& message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

}  // namespace hopfjordan
