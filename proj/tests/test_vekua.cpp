#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pseudoanalytic/bers.hpp"
#include "pseudoanalytic/contexts.hpp"
#include "pseudoanalytic/error.hpp"
#include "pseudoanalytic/oracles.hpp"
#include "pseudoanalytic/vekua.hpp"
#include "support.hpp"

using namespace pseudoanalytic;
using namespace pa_test;

namespace {

const Point z0{1, 2};

BiField poly(Signature s, const std::vector<double>& c, int degree, Domain dom = Domain::plane()) {
  return BiField::analytic(s, dom, [c, degree](const auto& x, const auto& y) {
    auto r = x * 0.0;
    std::size_t k = 0;
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; a + b <= degree; ++b) r = r + pow(x, a) * pow(y, b) * c[k++];
    return r;
  });
}

std::vector<double> coeffs(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> c;
  for (int i = 0; i < n; ++i) c.push_back(u(rng));
  return c;
}

/// Largest deviation from the mean of (a - b)/w over the points.
double spread(const BiField& a, const BiField& b, const std::vector<Point>& pts,
              const BiField& w = BiField::constant(one())) {
  std::vector<double> d;
  double mean = 0;
  for (Point p : pts) {
    d.push_back((a(p).re - b(p).re) / w(p).re);
    mean += d.back();
  }
  mean /= static_cast<double>(d.size());
  double worst = 0;
  for (double v : d) worst = std::max(worst, std::fabs(v - mean));
  return worst;
}

}  // namespace

TEST_CASE("main Vekua coefficient") {
  const MainVekua eq = make_vekua(contexts::f_y2());
  for (Point p : random_points(10, 0.5, 3, 0.5, 3)) CHECK(rel_err(eq.coeff(p), Binumber(0, 1 / p.y, E)) <= 1e-15);
}

TEST_CASE("vekua residual") {
  const auto ctx = contexts::f_y2();
  const MainVekua eq = make_vekua(ctx);
  const BiField z = BiField::analytic(E, ctx.domain, [](const auto& x, const auto& y) {
    return x + y * imag_unit_like(x);
  });
  CHECK(vekua_residual(eq, ctx.f, {1.2, 0.7}) <= 1e-15);
  CHECK(vekua_residual(eq, z, {1, 1}) == doctest::Approx(std::sqrt(2.0)));
  for (int n = 0; n <= 2; ++n)
    for (Binumber a : {one(), unit()})
      for (Point p : random_points(20, 0.5, 3, 0.5, 3)) CHECK(vekua_residual(eq, oracles::zf(n, a, z0), p) <= 1e-8);
}

TEST_CASE("conjugate construction, elliptic") {
  const auto unit_ctx = contexts::unit();
  const BiField W1 = BiField::analytic(E, Domain::plane(), [](const auto& x, const auto& y) { return x * x - y * y; });
  const BiField W2 = conjugate_imag(unit_ctx, W1, {0, 0});
  for (Point p : random_points(10, -2, 2, -2, 2)) CHECK(W2(p).re == doctest::Approx(2 * p.x * p.y).epsilon(1e-12));
  const BiField back = conjugate_real(unit_ctx, W2, {0, 0});
  CHECK(spread(back, W1, random_points(10, -2, 2, -2, 2)) <= 1e-10);

  const auto f = contexts::f_y2();
  const BiField Z = oracles::zf(1, one(), z0);
  const BiField V = conjugate_imag(f, real_part(Z), z0);
  for (Point p : random_points(20, 0.5, 3, 0.5, 3)) {
    const double want = (std::pow(p.y, 5) - std::pow(z0.y, 5)) / (5 * std::pow(z0.y * p.y, 2));
    CHECK(std::fabs(V(p).re - want) <= 1e-10 * std::max(1.0, std::fabs(want)));
  }
  // the additive constant of the antigradient enters W1 as a multiple of f
  const BiField U = conjugate_real(f, imag_part(Z), {2, 1});
  CHECK(spread(U, real_part(Z), random_points(20, 0.5, 3, 0.5, 3), f.f) <= 1e-9);
}

TEST_CASE("conjugate construction, hyperbolic") {
  const auto ctx = contexts::hyperbolic_unit();
  const BiField xt = BiField::analytic(H, Domain::plane(), [](const auto& x, const auto& t) { return x * t; });
  const Point c{0.3, -0.2};
  const BiField W2 = conjugate_imag(ctx, xt, c);
  const BiField W = xt + unit(H) * W2;
  for (Point p : random_points(20, -2, 2, -2, 2)) {
    CHECK(W2(p).re == doctest::Approx((p.x * p.x + p.y * p.y - c.x * c.x - c.y * c.y) / 2).epsilon(1e-12));
    const Jet j = W.jet(p, 1);
    // hyperbolic Cauchy-Riemann: u_x = v_t, u_t = v_x
    CHECK(std::fabs(j.at(1, 0).re - j.at(0, 1).im) <= 1e-10);
    CHECK(std::fabs(j.at(0, 1).re - j.at(1, 0).im) <= 1e-10);
  }
  const BiField back = conjugate_real(ctx, W2, c);
  CHECK(spread(back, xt, random_points(10, -2, 2, -2, 2)) <= 1e-10);
}

TEST_CASE("conjugate round trip on random solutions") {
  const auto f = contexts::f_y2();
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-1, 1), uc(0.7, 2.8);
  const auto pts = random_points(10, 0.5, 3, 0.5, 3, 4);
  for (int k = 0; k < 20; ++k) {
    BiField W = oracles::zf(0, Binumber(u(rng), u(rng), E), {uc(rng), uc(rng)});
    for (int n = 1; n <= 2; ++n) W = W + oracles::zf(n, Binumber(u(rng), u(rng), E), {uc(rng), uc(rng)});
    const Point base{uc(rng), uc(rng)};
    const BiField W1 = real_part(W);
    const BiField W2 = conjugate_imag(f, W1, base);
    const BiField R = conjugate_real(f, W2, base);
    CHECK(spread(R, W1, pts, f.f) <= 1e-7);
    ConjugateCfg pin;
    pin.constant = ConstantPolicy::pin_at(base, W1(base).re);
    const BiField Rp = conjugate_real(f, W2, base, pin);
    for (Point p : pts) CHECK(std::fabs(Rp(p).re - W1(p).re) <= 1e-7 * std::max(1.0, std::fabs(W1(p).re)));
    const MainVekua eq = make_vekua(f);
    CHECK(vekua_residual(eq, W1 + unit() * W2, pts[0]) <= 1e-8);
  }
}

TEST_CASE("conjugate construction rejects non-solutions") {
  const BiField x = coordinate_x(E, Domain::quadrant());
  try {
    (void)conjugate_imag(contexts::f_y2(), x, z0);
    FAIL("expected NotConservative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotConservative);
  }
}

TEST_CASE("real and imaginary parts solve their Schrodinger equations") {
  const auto f = contexts::f_y2();
  const auto seq = GeneratingSequence::constant(contexts::main_pair(f));
  const FormalPower Z = formal_power(seq, 2, Binumber(0.4, 0.9, E), z0);
  const BiField re = real_part(Z.value), im = imag_part(Z.value);
  for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
    CHECK(schrodinger_residual(f.q, re, p) <= 1e-8);
    CHECK(schrodinger_residual(f.q1, im, p) <= 1e-8);
  }
}

TEST_CASE("factorization of the Schrodinger operator") {
  const auto f = contexts::f_y2();
  CHECK(factorization_residual(f, f.f, {1.1, 0.9}) <= 1e-12);
  std::mt19937 rng(8);
  for (int k = 0; k < 10; ++k) {
    const BiField phi = poly(E, coeffs(rng, 15), 4, f.domain);
    for (Point p : random_points(5, 0.5, 3, 0.5, 3, k)) CHECK(factorization_residual(f, phi, p) <= 1e-7);
  }
  const auto h = contexts::hyperbolic_quadric();
  for (int k = 0; k < 10; ++k) {
    const BiField phi = poly(H, coeffs(rng, 15), 4);
    for (Point p : random_points(5, -1, 1, -1, 1, k)) CHECK(factorization_residual(h, phi, p) <= 1e-7);
  }
  SUBCASE("finite-difference input") {
    const auto c = coeffs(rng, 10);
    const BiField exact = poly(E, c, 3, f.domain);
    const BiField fd = BiField::finite_difference(E, f.domain, [exact](Point p) { return exact(p); });
    for (Point p : random_points(5, 0.5, 3, 0.5, 3)) CHECK(factorization_residual(f, fd, p) <= 1e-5);
  }
}

TEST_CASE("operators B, Pi and V") {
  const auto f = contexts::f_y2();
  const Point p{0.8, 1.7};
  CHECK(rel_err(apply_B(BiField::constant(one()), f.f)(p), one() * (p.y * p.y)) <= 1e-15);
  CHECK(rel_err(apply_B(BiField::constant(unit()), f.f)(p), unit() / (p.y * p.y)) <= 1e-15);
  std::mt19937 rng(3);
  const BiField w = poly(E, coeffs(rng, 10), 3) + unit() * poly(E, coeffs(rng, 10), 3);
  const BiField back = apply_B(apply_B(w, f.f, BDirection::forward), f.f, BDirection::inverse);
  for (Point q : random_points(10, 0.5, 3, 0.5, 3)) CHECK(rel_err(back(q), w(q)) <= 1e-14);

  const PAnalyticSystem sys = make_p_analytic(f);
  const PAnalyticSystem flat{BiField::constant(one())};
  const BiField z = BiField::analytic(E, Domain::plane(), [](const auto& x, const auto& y) { return x + y * imag_unit_like(x); });
  CHECK(p_analytic_residual(flat, z, p) <= 1e-15);
  CHECK(p_analytic_residual(sys, z, {1, 1.5}) > 0.1);
  const BiField om = apply_B(oracles::zf(1, one(), z0), f.f, BDirection::inverse);
  for (Point q : random_points(20, 0.5, 3, 0.5, 3)) CHECK(p_analytic_residual(sys, om, q) <= 1e-8);
}

TEST_CASE("V B = Pi") {
  std::mt19937 rng(17);
  const auto f = contexts::f_y2();
  for (Point p : random_points(50, 0.5, 3, 0.5, 3)) {
    const BiField w = poly(E, coeffs(rng, 10), 3) + unit() * poly(E, coeffs(rng, 10), 3);
    CHECK(relation_check(f.f, w, p) <= 1e-7);
  }
  CHECK(relation_check(f.f, BiField::constant(Binumber(2, -1, E)), {1, 1}) <= 1e-14);
  for (int k = 0; k < 10; ++k) {
    const auto cf = coeffs(rng, 6);
    const BiField pos = BiField::analytic(E, Domain::plane(), [cf](const auto& x, const auto& y) {
      return exp(x * cf[0] + y * cf[1] + x * y * cf[2] * 0.5);
    });
    const BiField w = poly(E, coeffs(rng, 10), 3) + unit() * poly(E, coeffs(rng, 10), 3);
    for (Point p : random_points(5, -1, 1, -1, 1, k)) CHECK(relation_check(pos, w, p) <= 1e-7);
  }
  const BiField w = poly(E, coeffs(rng, 10), 3) + unit() * poly(E, coeffs(rng, 10), 3);
  CHECK(relation_check(BiField::constant(one()), w, {0.2, 0.1}) <= 1e-14);
}
