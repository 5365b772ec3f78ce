#include "pseudoanalytic/oracles.hpp"

#include <cmath>

namespace pseudoanalytic::oracles {

namespace {

constexpr Signature E = Signature::Elliptic;

Domain quadrant() { return Domain::quadrant({0.0, 10.0, 0.0, 10.0}); }

template <class T>
T p(const T& v, int n) {
  return pow(v, n);
}

double p(double v, int n) { return std::pow(v, n); }

/// Closed form from a pair of generic callables for the real and imaginary
/// parts; both are real-valued expressions in x and y.
template <class Re, class Im>
BiField make(Re re, Im im) {
  return BiField::analytic(E, quadrant(), [re, im](const auto& x, const auto& y) {
    return re(x, y) + im(x, y) * Binumber::unit(E);
  });
}

BiField combine(const Binumber& a, const BiField& one, const BiField& i) {
  require(a.sig == E, "oracles: elliptic coefficient expected");
  return one * a.re + i * a.im;
}

}  // namespace

BiField zf(int n, const Binumber& a, Point z0, bool printed_term) {
  const double x0 = z0.x, y0 = z0.y;
  switch (n) {
    case 0:
      return combine(a, make([=](auto, auto y) { return p(y / y0, 2); }, [](auto x, auto) { return 0.0 * x; }),
                     make([](auto x, auto) { return 0.0 * x; }, [=](auto, auto y) { return p(y0 / y, 2); }));
    case 1:
      return combine(
          a,
          make([=](auto x, auto y) { return (x - x0) * p(y / y0, 2); },
               [=](auto, auto y) { return (p(y, 5) - p(y0, 5)) / (5.0 * p(y0 * y, 2)); }),
          make([=](auto, auto y) { return -(p(y, 3) - p(y0, 3)) / (3.0 * y0 * y); },
               [=](auto x, auto y) { return (x - x0) * p(y0 / y, 2); }));
    case 2: {
      const double k = printed_term ? y0 : p(y0, 5);
      return combine(
          a,
          make([=](auto x, auto y) {
                 return (15.0 * p(x - x0, 2) * p(y, 4) - 3.0 * p(y, 6) + 5.0 * y0 * y0 * p(y, 4) -
                         2.0 * k * y) / (15.0 * p(y0 * y, 2));
               },
               [=](auto x, auto y) {
                 return 6.0 * (x - x0) * (p(y, 5) - p(y0, 5)) / (15.0 * p(y0 * y, 2));
               }),
          make([=](auto x, auto y) {
                 return -10.0 * (x - x0) * y * (p(y, 3) - p(y0, 3)) / (15.0 * y0 * y * y);
               },
               [=](auto x, auto y) {
                 return (15.0 * p(y0, 3) * p(x - x0, 2) + 5.0 * p(y0, 3) * y * y - 2.0 * p(y, 5) -
                         3.0 * p(y0, 5)) / (15.0 * y0 * y * y);
               }));
    }
    default:
      throw ContractViolation("oracles::zf: order must be 0, 1 or 2");
  }
}

BiField zg(int n, const Binumber& a, Point z0) {
  const double x0 = z0.x, y0 = z0.y;
  const double g0 = (1.0 + x0 * p(y0, 3)) / y0;
  switch (n) {
    case 0:
      return combine(
          a,
          make([=](auto x, auto y) { return (1.0 + x * p(y, 3)) / (y * g0); },
               [](auto x, auto) { return 0.0 * x; }),
          make([](auto x, auto) { return 0.0 * x; },
               [=](auto x, auto y) { return g0 * y / (1.0 + x * p(y, 3)); }));
    case 1:
      return combine(
          a,
          make([=](auto x, auto y) { return (x - x0) * p(y / y0, 2); },
               [=](auto x, auto y) {
                 return (5.0 * (y * y - y0 * y0) + 2.0 * x0 * (p(y, 5) - p(y0, 5)) -
                         15.0 * p(x - x0, 2)) * y / (10.0 * y0 * y0 * (1.0 + x * p(y, 3)));
               }),
          make([=](auto, auto y) { return -(p(y, 3) - p(y0, 3)) / (3.0 * y0 * y); },
               [=](auto x, auto y) {
                 return (30.0 * (x - x0) + 15.0 * p(y0, 3) * (x * x - x0 * x0) -
                         5.0 * p(y0, 3) * y * y + 2.0 * p(y, 5) + 3.0 * p(y0, 5)) * y /
                        (30.0 * y0 * (1.0 + x * p(y, 3)));
               }));
    case 2:
      return combine(
          a,
          make([=](auto x, auto y) {
                 return (15.0 * p(x - x0, 2) * p(y, 4) - 3.0 * p(y, 6) + 5.0 * y0 * y0 * p(y, 4) -
                         2.0 * p(y0, 5) * y) / (15.0 * p(y0 * y, 2));
               },
               [=](auto x, auto y) {
                 return y / (105.0 * y0 * y0 * (1.0 + x * p(y, 3))) *
                        (315.0 * x0 * x * (x - x0) + 105.0 * (x - x0) * (y * y - y0 * y0) -
                         105.0 * (p(x, 3) - p(x0, 3)) +
                         21.0 * (x * x - x0 * x0) * (p(y, 5) - p(y0, 5)) -
                         7.0 * p(y0 * y, 2) * (p(y, 3) - p(y0, 3)) + 3.0 * (p(y, 7) - p(y0, 7)));
               }),
          make([=](auto x, auto y) {
                 return -2.0 * (x - x0) * y * (p(y, 3) - p(y0, 3)) / (3.0 * y0 * y * y);
               },
               [=](auto x, auto y) {
                 const double Y0 = p(y0, 3);
                 return (15.0 * p(x - x0, 2) * y + 10.0 * Y0 * p(x, 3) * y -
                         15.0 * x0 * Y0 * x * x * y + 5.0 * p(x0, 3) * Y0 * y -
                         2.0 * x0 * p(y, 6) - 5.0 * p(y, 3) + 5.0 * x0 * Y0 * p(y, 3) - 10.0 * Y0 -
                         3.0 * x0 * p(y0, 5) * y + 15.0 * y0 * y0 * y) /
                        (15.0 * y0 * (1.0 + x * p(y, 3)));
               }));
    default:
      throw ContractViolation("oracles::zg: order must be 0, 1 or 2");
  }
}

BiField F1(Point z0) {
  const double x0 = z0.x, y0 = z0.y;
  return make(
      [=](auto x, auto y) { return y * y * (1.0 + x0 * p(y, 3)) / (y0 * y0 * (1.0 + x * p(y, 3))); },
      [=](auto x, auto y) { return -3.0 * y * (x - x0) / (y0 * y0 * (1.0 + x * p(y, 3))); });
}

BiField G1(Point z0) {
  const double y0 = z0.y;
  return make(
      [=](auto x, auto y) { return y * y * (p(y, 3) - p(y0, 3)) / (3.0 * y0 * (1.0 + x * p(y, 3))); },
      [=](auto x, auto y) { return 3.0 * y * (1.0 + x * p(y0, 3)) / (3.0 * y0 * (1.0 + x * p(y, 3))); });
}

BiField F2(Point z0) { return zf(0, Binumber::real(1.0, E), z0); }

BiField G2(Point z0) { return zf(0, Binumber::unit(E), z0); }

double im_F1G1(Point z, Point z0) {
  const auto g = [](Point q) { return (1.0 + q.x * q.y * q.y * q.y) / q.y; };
  return (z.y / z0.y) * (z.y / z0.y) * g(z0) / g(z);
}

double im_F1G1_stated(Point z, Point z0) { return 0.5 * im_F1G1(z, z0); }

namespace {

double kernel_tail(Point z, Point z0) {
  const double x = z.x, y = z.y, x0 = z0.x, y0 = z0.y;
  const double r2 = (x - x0) * (x - x0) + (y - y0) * (y - y0);
  const double P = -2.0 * y0 * x * y + 2.0 * x0 * x0 * x + 2.0 * y0 * y0 * x + 2.0 * x * x * x -
                   4.0 * x0 * x * x;
  return P / (2.0 * r2);
}

double r_sq(Point z, Point z0) {
  return (z.x - z0.x) * (z.x - z0.x) + (z.y - z0.y) * (z.y - z0.y);
}

}  // namespace

Binumber kernel_printed(Point z, Point z0) {
  const double x = z.x, y = z.y, x0 = z0.x, y0 = z0.y;
  const double r2 = r_sq(z, z0);
  const double abar = y0 * std::atan(y0 / x0) + 0.5 * x0 * std::log(r2 / (x * x + y * y)) -
                      y0 * std::atan((y - y0) / (x - x0)) + kernel_tail(z, z0);
  return {(x - x0) / r2, abar / (x * y), E};
}

Binumber kernel_corrected(Point z, Point z0, const std::vector<Point>& path) {
  require(path.size() >= 2, "kernel_corrected: path needs two vertices");
  const Point b = path.front();
  double theta = std::atan2(b.y - z0.y, b.x - z0.x);
  const double theta_b = theta;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Point u = path[i - 1] - z0, v = path[i] - z0;
    theta += std::atan2(u.x * v.y - u.y * v.x, u.x * v.x + u.y * v.y);
  }
  const auto C = [&](Point q, double th) {
    return 0.5 * z0.x * std::log(r_sq(q, z0)) - z0.y * th + kernel_tail(q, z0);
  };
  const double abar = C(z, theta) - C(b, theta_b);
  return {(z.x - z0.x) / r_sq(z, z0), abar / (z.x * z.y), E};
}

}  // namespace pseudoanalytic::oracles
