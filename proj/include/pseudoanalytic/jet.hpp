#pragma once

#include <boost/container/small_vector.hpp>

#include "pseudoanalytic/algebra.hpp"

namespace pseudoanalytic {

/// Truncated bivariate Taylor expansion with Binumber coefficients.
///
/// Coefficient (a, b) multiplies dx^a dy^b, so the partial derivative
/// d^{a+b}/dx^a dy^b equals a! b! times it.  Arithmetic truncates at the
/// smaller order of the operands.
class Jet {
 public:
  Jet() = default;
  Jet(Signature sig, int order);

  static Jet constant(const Binumber& c, int order);
  /// Coordinate function: axis 0 is x, axis 1 is y (or t).
  static Jet coordinate(double value, int axis, Signature sig, int order);

  static constexpr int size(int order) { return (order + 1) * (order + 2) / 2; }
  static constexpr int index(int a, int b) { return (a + b) * (a + b + 1) / 2 + b; }

  int order() const { return order_; }
  Signature sig() const { return sig_; }

  Binumber& at(int a, int b) { return c_[index(a, b)]; }
  const Binumber& at(int a, int b) const { return c_[index(a, b)]; }
  Binumber& operator[](int i) { return c_[i]; }
  const Binumber& operator[](int i) const { return c_[i]; }

  const Binumber& value() const { return c_[0]; }
  /// d^{a+b} / dx^a dy^b at the expansion point.
  Binumber partial(int a, int b) const;

  Jet truncated(int order) const;
  Jet d_x() const;
  Jet d_y() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(double s);
  Jet& operator*=(const Binumber& s);

 private:
  int order_ = 0;
  Signature sig_ = Signature::Elliptic;
  boost::container::small_vector<Binumber, 6> c_;
};

Jet operator*(const Jet& a, const Jet& b);
Jet inverse(const Jet& a);
Jet conj(const Jet& a);
Jet times_unit(const Jet& a);
/// Componentwise real and imaginary parts, returned as real-valued jets.
Jet real_part(const Jet& a);
Jet imag_part(const Jet& a);

/// Wirtinger derivatives; elliptic dzbar = (dx + i dy)/2, hyperbolic (dx - j dt)/2.
Jet d_zbar(const Jet& a);
Jet d_z(const Jet& a);

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator-(Jet a) { return a *= -1.0; }
inline Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }

Jet operator+(Jet a, const Binumber& s);
Jet operator-(Jet a, const Binumber& s);
inline Jet operator+(const Binumber& s, Jet a) { return std::move(a) + s; }
inline Jet operator-(const Binumber& s, const Jet& a) { return -a + s; }
inline Jet operator*(Jet a, const Binumber& s) { return a *= s; }
inline Jet operator*(const Binumber& s, Jet a) { return a *= s; }
inline Jet operator/(const Jet& a, const Binumber& s) { return a * inverse(s); }
inline Jet operator/(const Binumber& s, const Jet& a) { return inverse(a) * s; }

Jet operator+(Jet a, double s);
inline Jet operator+(double s, Jet a) { return std::move(a) + s; }
inline Jet operator-(Jet a, double s) { return std::move(a) + (-s); }
inline Jet operator-(double s, const Jet& a) { return -a + s; }
inline Jet operator*(Jet a, double s) { return a *= s; }
inline Jet operator*(double s, Jet a) { return a *= s; }
inline Jet operator/(Jet a, double s) { return a *= 1.0 / s; }
inline Jet operator/(double s, const Jet& a) { return inverse(a) * s; }

Jet pow(const Jet& a, int n);

inline Binumber imag_unit_like(const Jet& a) { return Binumber::unit(a.sig()); }
inline Binumber constant_like(const Jet& a, double v) { return Binumber::real(v, a.sig()); }

/// Real elementary functions; the argument must be real-valued.
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet atan(const Jet& a);

}  // namespace pseudoanalytic
