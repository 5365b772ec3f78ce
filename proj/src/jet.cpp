#include "pseudoanalytic/jet.hpp"

#include <cmath>
#include <vector>

namespace pseudoanalytic {

Jet::Jet(Signature sig, int order) : order_(order), sig_(sig) {
  require(order >= 0, "Jet: negative order");
  c_.assign(size(order), Binumber(0.0, 0.0, sig));
}

Jet Jet::constant(const Binumber& c, int order) {
  Jet j(c.sig, order);
  j.c_[0] = c;
  return j;
}

Jet Jet::coordinate(double value, int axis, Signature sig, int order) {
  Jet j(sig, order);
  j.c_[0].re = value;
  if (order >= 1) j.at(axis == 0 ? 1 : 0, axis == 0 ? 0 : 1).re = 1.0;
  return j;
}

Binumber Jet::partial(int a, int b) const {
  require(a + b <= order_, "Jet::partial: order exceeds jet order");
  double f = 1.0;
  for (int k = 2; k <= a; ++k) f *= k;
  for (int k = 2; k <= b; ++k) f *= k;
  return at(a, b) * f;
}

Jet Jet::truncated(int order) const {
  require(order <= order_, "Jet::truncated: cannot raise order");
  Jet j;
  j.order_ = order;
  j.sig_ = sig_;
  j.c_.assign(c_.begin(), c_.begin() + size(order));
  return j;
}

Jet Jet::d_x() const {
  require(order_ >= 1, "Jet::d_x: order-0 jet");
  Jet r(sig_, order_ - 1);
  for (int d = 0; d < order_; ++d)
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      r.at(a, b) = at(a + 1, b) * static_cast<double>(a + 1);
    }
  return r;
}

Jet Jet::d_y() const {
  require(order_ >= 1, "Jet::d_y: order-0 jet");
  Jet r(sig_, order_ - 1);
  for (int d = 0; d < order_; ++d)
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      r.at(a, b) = at(a, b + 1) * static_cast<double>(b + 1);
    }
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  check_same(sig_, o.sig_);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i < size(order_); ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_same(sig_, o.sig_);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (int i = 0; i < size(order_); ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Jet& Jet::operator*=(const Binumber& s) {
  for (auto& c : c_) c = mul(c, s);
  return *this;
}

Jet operator*(const Jet& u, const Jet& v) {
  check_same(u.sig(), v.sig());
  const int K = std::min(u.order(), v.order());
  Jet r(u.sig(), K);
  if (K == 0) {
    r[0] = mul(u[0], v[0]);
    return r;
  }
  for (int d = 0; d <= K; ++d)
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      Binumber s(0.0, 0.0, u.sig());
      for (int a1 = 0; a1 <= a; ++a1)
        for (int b1 = 0; b1 <= b; ++b1) s += mul(u.at(a1, b1), v.at(a - a1, b - b1));
      r.at(a, b) = s;
    }
  return r;
}

Jet inverse(const Jet& v) {
  const int K = v.order();
  Jet w(v.sig(), K);
  const Binumber w0 = inverse(v[0]);
  w[0] = w0;
  for (int d = 1; d <= K; ++d)
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      Binumber s(0.0, 0.0, v.sig());
      for (int a1 = 0; a1 <= a; ++a1)
        for (int b1 = 0; b1 <= b; ++b1) {
          if (a1 == 0 && b1 == 0) continue;
          s += mul(v.at(a1, b1), w.at(a - a1, b - b1));
        }
      w.at(a, b) = -mul(w0, s);
    }
  return w;
}

Jet conj(const Jet& a) {
  Jet r = a;
  for (int i = 0; i < Jet::size(r.order()); ++i) r[i].im = -r[i].im;
  return r;
}

Jet times_unit(const Jet& a) {
  Jet r = a;
  for (int i = 0; i < Jet::size(r.order()); ++i) r[i] = times_unit(a[i]);
  return r;
}

Jet real_part(const Jet& a) {
  Jet r = a;
  for (int i = 0; i < Jet::size(r.order()); ++i) r[i].im = 0.0;
  return r;
}

Jet imag_part(const Jet& a) {
  Jet r = a;
  for (int i = 0; i < Jet::size(r.order()); ++i) r[i] = Binumber::real(a[i].im, a.sig());
  return r;
}

Jet d_zbar(const Jet& a) {
  const double s = -sigma(a.sig());
  return (a.d_x() + times_unit(a.d_y()) * s) * 0.5;
}

Jet d_z(const Jet& a) {
  const double s = sigma(a.sig());
  return (a.d_x() + times_unit(a.d_y()) * s) * 0.5;
}

Jet operator+(Jet a, const Binumber& s) {
  a[0] += s;
  return a;
}

Jet operator-(Jet a, const Binumber& s) {
  a[0] -= s;
  return a;
}

Jet operator+(Jet a, double s) {
  a[0].re += s;
  return a;
}

Jet pow(const Jet& a, int n) {
  if (n < 0) return inverse(pow(a, -n));
  Jet r = Jet::constant(Binumber::real(1.0, a.sig()), a.order());
  Jet base = a;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

namespace {

// f(u) = sum_k f^(k)(u0)/k! (u-u0)^k for a real-valued jet u.
Jet compose(const Jet& u, const std::vector<double>& derivs, const char* fn) {
  for (int i = 0; i < Jet::size(u.order()); ++i)
    if (u[i].im != 0.0) throw ContractViolation(std::string(fn) + ": argument must be real");
  Jet delta = u;
  delta[0] = Binumber(0.0, 0.0, u.sig());
  Jet r = Jet::constant(Binumber::real(derivs[0], u.sig()), u.order());
  Jet p = Jet::constant(Binumber::real(1.0, u.sig()), u.order());
  double fact = 1.0;
  for (int k = 1; k <= u.order(); ++k) {
    p = p * delta;
    fact *= k;
    r += p * (derivs[k] / fact);
  }
  return r;
}

}  // namespace

Jet exp(const Jet& a) {
  return compose(a, std::vector<double>(a.order() + 1, std::exp(a[0].re)), "exp");
}

Jet log(const Jet& a) {
  const double x = a[0].re;
  std::vector<double> d(a.order() + 1);
  d[0] = std::log(x);
  double f = 1.0;
  for (int k = 1; k <= a.order(); ++k) {
    if (k > 1) f *= -(k - 1);
    d[k] = f / std::pow(x, k);
  }
  return compose(a, d, "log");
}

Jet sqrt(const Jet& a) {
  const double x = a[0].re;
  std::vector<double> d(a.order() + 1);
  double c = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    d[k] = c * std::pow(x, 0.5 - k);
    c *= 0.5 - k;
  }
  return compose(a, d, "sqrt");
}

Jet sin(const Jet& a) {
  const double s = std::sin(a[0].re), c = std::cos(a[0].re);
  const double cyc[4] = {s, c, -s, -c};
  std::vector<double> d(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) d[k] = cyc[k % 4];
  return compose(a, d, "sin");
}

Jet cos(const Jet& a) {
  const double s = std::sin(a[0].re), c = std::cos(a[0].re);
  const double cyc[4] = {c, -s, -c, s};
  std::vector<double> d(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) d[k] = cyc[k % 4];
  return compose(a, d, "cos");
}

Jet sinh(const Jet& a) {
  const double s = std::sinh(a[0].re), c = std::cosh(a[0].re);
  std::vector<double> d(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) d[k] = (k % 2 == 0) ? s : c;
  return compose(a, d, "sinh");
}

Jet cosh(const Jet& a) {
  const double s = std::sinh(a[0].re), c = std::cosh(a[0].re);
  std::vector<double> d(a.order() + 1);
  for (int k = 0; k <= a.order(); ++k) d[k] = (k % 2 == 0) ? c : s;
  return compose(a, d, "cosh");
}

Jet atan(const Jet& a) {
  const double x = a[0].re;
  const double theta = std::atan2(1.0, x);
  std::vector<double> d(a.order() + 1);
  d[0] = std::atan(x);
  double f = 1.0;
  for (int k = 1; k <= a.order(); ++k) {
    if (k > 1) f *= -(k - 1);
    d[k] = f * std::sin(k * theta) / std::pow(1.0 + x * x, 0.5 * k);
  }
  return compose(a, d, "atan");
}

}  // namespace pseudoanalytic
