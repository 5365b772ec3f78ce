#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>

#include "pseudoanalytic/error.hpp"

namespace pseudoanalytic {

/// sigma = -1: elliptic, i^2 = -1.  sigma = +1: hyperbolic, j^2 = +1.
enum class Signature : std::int8_t { Elliptic = -1, Hyperbolic = 1 };

inline double sigma(Signature s) { return static_cast<double>(static_cast<int>(s)); }
const char* to_string(Signature s);

/// re + e*im with e^2 = sigma.
struct Binumber {
  double re = 0.0;
  double im = 0.0;
  Signature sig = Signature::Elliptic;

  constexpr Binumber() = default;
  constexpr Binumber(double r, double i, Signature s) : re(r), im(i), sig(s) {}

  static constexpr Binumber real(double r, Signature s) { return {r, 0.0, s}; }
  static constexpr Binumber unit(Signature s) { return {0.0, 1.0, s}; }

  Binumber& operator+=(const Binumber& o);
  Binumber& operator-=(const Binumber& o);
  Binumber& operator*=(const Binumber& o);
  Binumber& operator*=(double s) {
    re *= s;
    im *= s;
    return *this;
  }
  Binumber& operator/=(const Binumber& o);
};

inline void check_same(Signature a, Signature b) {
  if (a != b) throw ContractViolation("signature mismatch between operands");
}

inline Binumber mul(const Binumber& a, const Binumber& b) {
  check_same(a.sig, b.sig);
  return {a.re * b.re + sigma(a.sig) * a.im * b.im, a.re * b.im + a.im * b.re, a.sig};
}

inline Binumber conj(const Binumber& w) { return {w.re, -w.im, w.sig}; }
inline double modulus_sq(const Binumber& w) { return w.re * w.re - sigma(w.sig) * w.im * w.im; }

/// Relative null-cone test: |modulus_sq| <= tol * (re^2 + im^2).
bool is_null_cone(const Binumber& w, double tol);

/// Throws NotInvertible on the null cone.
Binumber inverse(const Binumber& w);

/// Euclidean size of the component vector, used for residuals in both signatures.
inline double norm(const Binumber& w) { return std::hypot(w.re, w.im); }

/// Signature modulus: sqrt(|modulus_sq|).
inline double modulus(const Binumber& w) { return std::sqrt(std::fabs(modulus_sq(w))); }

inline Binumber operator+(Binumber a, const Binumber& b) { return a += b; }
inline Binumber operator-(Binumber a, const Binumber& b) { return a -= b; }
inline Binumber operator*(const Binumber& a, const Binumber& b) { return mul(a, b); }
inline Binumber operator/(const Binumber& a, const Binumber& b) { return mul(a, inverse(b)); }
inline Binumber operator-(const Binumber& a) { return {-a.re, -a.im, a.sig}; }

inline Binumber operator+(Binumber a, double s) { a.re += s; return a; }
inline Binumber operator+(double s, Binumber a) { a.re += s; return a; }
inline Binumber operator-(Binumber a, double s) { a.re -= s; return a; }
inline Binumber operator-(double s, const Binumber& a) { return {s - a.re, -a.im, a.sig}; }
inline Binumber operator*(Binumber a, double s) { return a *= s; }
inline Binumber operator*(double s, Binumber a) { return a *= s; }
inline Binumber operator/(Binumber a, double s) { return a *= 1.0 / s; }
inline Binumber operator/(double s, const Binumber& a) { return inverse(a) * s; }

inline bool operator==(const Binumber& a, const Binumber& b) {
  return a.sig == b.sig && a.re == b.re && a.im == b.im;
}

/// Multiplication by the imaginary unit: e*(re + e*im) = sigma*im + e*re.
/// Integer power; negative exponents go through inverse().
inline Binumber pow(const Binumber& w, int n) {
  Binumber r = Binumber::real(1.0, w.sig);
  const Binumber b = n < 0 ? inverse(w) : w;
  for (int k = 0; k < (n < 0 ? -n : n); ++k) r = r * b;
  return r;
}

inline Binumber times_unit(const Binumber& w) { return {sigma(w.sig) * w.im, w.re, w.sig}; }

inline Binumber imag_unit_like(const Binumber& w) { return Binumber::unit(w.sig); }
inline Binumber constant_like(const Binumber& w, double v) { return Binumber::real(v, w.sig); }

/// Real elementary functions; the argument must have zero imaginary part.
Binumber exp(const Binumber& w);
Binumber log(const Binumber& w);
Binumber sqrt(const Binumber& w);
Binumber sin(const Binumber& w);
Binumber cos(const Binumber& w);
Binumber sinh(const Binumber& w);
Binumber cosh(const Binumber& w);
Binumber atan(const Binumber& w);

std::ostream& operator<<(std::ostream& os, const Binumber& w);

}  // namespace pseudoanalytic
