#include "pseudoanalytic/algebra.hpp"

#include <limits>
#include <ostream>

namespace pseudoanalytic {

const char* to_string(Signature s) {
  return s == Signature::Elliptic ? "elliptic" : "hyperbolic";
}

Binumber& Binumber::operator+=(const Binumber& o) {
  check_same(sig, o.sig);
  re += o.re;
  im += o.im;
  return *this;
}

Binumber& Binumber::operator-=(const Binumber& o) {
  check_same(sig, o.sig);
  re -= o.re;
  im -= o.im;
  return *this;
}

Binumber& Binumber::operator*=(const Binumber& o) { return *this = mul(*this, o); }
Binumber& Binumber::operator/=(const Binumber& o) { return *this = mul(*this, inverse(o)); }

bool is_null_cone(const Binumber& w, double tol) {
  require(tol >= 0.0, "is_null_cone: negative tolerance");
  return std::fabs(modulus_sq(w)) <= tol * (w.re * w.re + w.im * w.im);
}

Binumber inverse(const Binumber& w) {
  const double m = modulus_sq(w);
  if (m == 0.0 || is_null_cone(w, 4.0 * std::numeric_limits<double>::epsilon()))
    fail(ErrorKind::NotInvertible, "element on the null cone");
  return {w.re / m, -w.im / m, w.sig};
}

namespace {

double real_arg(const Binumber& w, const char* fn) {
  if (w.im != 0.0) throw ContractViolation(std::string(fn) + ": argument must be real");
  return w.re;
}

}  // namespace

Binumber exp(const Binumber& w) { return Binumber::real(std::exp(real_arg(w, "exp")), w.sig); }
Binumber log(const Binumber& w) { return Binumber::real(std::log(real_arg(w, "log")), w.sig); }
Binumber sqrt(const Binumber& w) { return Binumber::real(std::sqrt(real_arg(w, "sqrt")), w.sig); }
Binumber sin(const Binumber& w) { return Binumber::real(std::sin(real_arg(w, "sin")), w.sig); }
Binumber cos(const Binumber& w) { return Binumber::real(std::cos(real_arg(w, "cos")), w.sig); }
Binumber sinh(const Binumber& w) { return Binumber::real(std::sinh(real_arg(w, "sinh")), w.sig); }
Binumber cosh(const Binumber& w) { return Binumber::real(std::cosh(real_arg(w, "cosh")), w.sig); }
Binumber atan(const Binumber& w) { return Binumber::real(std::atan(real_arg(w, "atan")), w.sig); }

std::ostream& operator<<(std::ostream& os, const Binumber& w) {
  return os << '(' << w.re << (w.im < 0 ? " - " : " + ") << std::fabs(w.im)
            << (w.sig == Signature::Elliptic ? "i" : "j") << ')';
}

}  // namespace pseudoanalytic
