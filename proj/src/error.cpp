#include "pseudoanalytic/error.hpp"

namespace pseudoanalytic {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Stencil: return "StencilError";
    case ErrorKind::Positivity: return "PositivityError";
    case ErrorKind::NotConservative: return "NotConservative";
    case ErrorKind::Quadrature: return "QuadratureError";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::SequenceExhausted: return "SequenceExhausted";
    case ErrorKind::NotGeneratingPair: return "NotGeneratingPair";
    case ErrorKind::Fit: return "FitError";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::PathThroughPole: return "PathThroughPole";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace pseudoanalytic
