#pragma once

#include <stdexcept>
#include <string>

namespace pseudoanalytic {

enum class ErrorKind {
  NotInvertible,
  Domain,
  Stencil,
  Positivity,
  NotConservative,
  Quadrature,
  DegeneratePair,
  SequenceExhausted,
  NotGeneratingPair,
  Fit,
  ContextMismatch,
  PathThroughPole
};

const char* to_string(ErrorKind kind);

/// Numerical or domain failure reported by a library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Programming error: mixed signatures, bad configuration, unsupported order.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);
void require(bool cond, const std::string& what);

}  // namespace pseudoanalytic
