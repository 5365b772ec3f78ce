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

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Domain;
}

GeneratingPair analytic_pair() {
  return GeneratingPair::make(BiField::constant(one()), BiField::constant(unit()));
}

BiField zfield() {
  return BiField::analytic(E, Domain::plane(), [](const auto& x, const auto& y) { return x + y * imag_unit_like(x); });
}

GeneratingSequence f_sequence() { return GeneratingSequence::constant(contexts::main_pair(contexts::f_y2())); }

}  // namespace

TEST_CASE("characteristic coefficients") {
  const GeneratingPair fp = contexts::main_pair(contexts::f_y2());
  const GeneratingPair gp = contexts::main_pair(contexts::g_1xy3());
  const GeneratingPair p1 = GeneratingPair::make(oracles::F1(z0), oracles::G1(z0));
  for (Point p : random_points(20, 0.5, 3, 0.5, 3)) {
    const double x = p.x, y = p.y, d = y * (1 + x * y * y * y);
    const CharCoeffs c = char_coeffs(fp, p);
    CHECK(norm(c.a) <= 1e-15);
    CHECK(rel_err(c.b, Binumber(0, 1 / y, E)) <= 1e-14);
    const CharCoeffs cg = char_coeffs(gp, p);
    CHECK(rel_err(cg.B, Binumber(0.5 * std::pow(y, 4) / d, 0.5 * (1 - 2 * x * y * y * y) / d, E)) <= 1e-13);
    const CharCoeffs c1 = char_coeffs(p1, p);
    CHECK(rel_err(c1.A, Binumber(-std::pow(y, 4) / (2 * d), -3 / (2 * d), E)) <= 1e-12);
    CHECK(rel_err(c1.B, Binumber(0, -1 / y, E)) <= 1e-12);
  }
}

TEST_CASE("pair validation") {
  CHECK(kind_of([] { (void)GeneratingPair::make(BiField::constant(unit()), BiField::constant(one())); }) ==
        ErrorKind::NotGeneratingPair);
  const GeneratingPair deg = GeneratingPair::make(BiField::constant(one()), BiField::constant(one()), 0);
  CHECK(kind_of([&] { (void)char_coeffs(deg, {0, 0}); }) == ErrorKind::DegeneratePair);
  CHECK(kind_of([&] { (void)formal_power_zero(deg, one(), {0, 0}); }) == ErrorKind::DegeneratePair);
}

TEST_CASE("adjoint pair") {
  const GeneratingPair fp = contexts::main_pair(contexts::f_y2());
  const GeneratingPair fa = adjoint(fp);
  for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
    CHECK(rel_err(fa.F(p), Binumber(0, -p.y * p.y, E)) <= 1e-15);
    CHECK(rel_err(fa.G(p), Binumber(1 / (p.y * p.y), 0, E)) <= 1e-15);
  }
  const GeneratingPair aa = adjoint(analytic_pair());
  CHECK(rel_err(aa.F({0, 0}), Binumber(0, -1, E)) <= 1e-15);
  CHECK(rel_err(aa.G({0, 0}), one()) <= 1e-15);

  std::mt19937 rng(10);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (Signature s : {E, H}) {
    for (int k = 0; k < 10; ++k) {
      const double c0 = u(rng), c1 = u(rng), c2 = u(rng), c3 = u(rng);
      const Domain box = Domain::rectangle({-1, 1, -1, 1});
      const BiField F = BiField::analytic(s, box, [=](const auto& x, const auto& y) {
        return 1.0 + x * c0 + (y * c1) * imag_unit_like(x);
      });
      const BiField G = F * (BiField::analytic(s, box, [=](const auto& x, const auto& y) {
        return c2 + (1.5 + x * y * c3) * imag_unit_like(x);
      }));
      const GeneratingPair pr = GeneratingPair::make(F, G, s == E ? 8 : 0);
      const GeneratingPair back = adjoint(adjoint(pr));
      for (Point p : random_points(5, -1, 1, -1, 1, k)) {
        CHECK(rel_err(back.F(p), F(p)) <= 1e-10);
        CHECK(rel_err(back.G(p), G(p)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("(F,G)-derivative") {
  const BiField w = BiField::analytic(E, Domain::plane(), [](const auto& x, const auto& y) {
    const auto z = x + y * imag_unit_like(x);
    return z * z * z;
  });
  const Point p{0.3, 0.7};
  const Binumber zp(p.x, p.y, E);
  CHECK(rel_err(fg_derivative(analytic_pair(), w, p), zp * zp * 3.0) <= 1e-14);
  const GeneratingPair gp = contexts::main_pair(contexts::g_1xy3());
  for (Point q : random_points(20, 0.5, 3, 0.5, 3)) {
    CHECK(norm(fg_derivative(gp, gp.F, q)) <= 1e-12);
    CHECK(norm(fg_derivative(gp, gp.G, q)) <= 1e-12);
    CHECK(rel_err(fg_derivative(gp, oracles::zg(1, one(), z0), q), oracles::F1(z0)(q)) <= 1e-12);
    CHECK(rel_err(fg_derivative(gp, oracles::zg(1, unit(), z0), q), oracles::G1(z0)(q)) <= 1e-12);
  }
}

TEST_CASE("(F,G)-integral") {
  const BiField sq = zfield() * zfield();
  const Path path{route(PathPolicy{}, {0.1, -0.2}, {1.3, 0.8}, {}), {}};
  const Binumber a(0.1, -0.2, E), b(1.3, 0.8, E);
  CHECK(rel_err(fg_integral(analytic_pair(), sq, path), (b * b * b - a * a * a) / 3.0) <= 1e-13);

  const GeneratingPair fp = contexts::main_pair(contexts::f_y2());
  const Point z{2.5, 0.8};
  const Path pz{route(PathPolicy{}, z0, z, {}), {}};
  CHECK(rel_err(fg_integral(fp, oracles::zf(0, one(), z0), pz), oracles::zf(1, one(), z0)(z)) <= 1e-12);

  SUBCASE("antiderivative of a derivative, along two paths") {
    const GeneratingPair gp = contexts::main_pair(contexts::g_1xy3());
    const BiField W = oracles::zg(2, Binumber(0.6, -0.3, E), {1.4, 1.1});
    const Point s{0.7, 2.2};
    const Binumber ws = W(s), Fs = gp.F(s), Gs = gp.G(s);
    const double det = Fs.re * Gs.im - Gs.re * Fs.im;
    const double phi = (ws.re * Gs.im - Gs.re * ws.im) / det, psi = (Fs.re * ws.im - ws.re * Fs.im) / det;
    for (Point e : random_points(5, 0.5, 3, 0.5, 3)) {
      const Binumber want = W(e) - gp.F(e) * phi - gp.G(e) * psi;
      const Path p1{route(PathPolicy{}, s, e, {}), {}};
      const Path p2{route(PathPolicy::polyline({{2.8, 2.9}}), s, e, {}), {}};
      const BiField d = fg_derivative(gp, W);
      CHECK(rel_err(fg_integral(gp, d, p1), want) <= 1e-10);
      CHECK(rel_err(fg_integral(gp, d, p2), want) <= 1e-10);
    }
  }
}

TEST_CASE("formal powers of order zero") {
  const GeneratingPair fp = contexts::main_pair(contexts::f_y2());
  for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
    CHECK(rel_err(formal_power_zero(fp, one(), z0).value(p), one() * (p.y * p.y / 4)) <= 1e-15);
    CHECK(rel_err(formal_power_zero(fp, unit(), z0).value(p), unit() * (4 / (p.y * p.y))) <= 1e-15);
  }
  const FormalPower c = formal_power_zero(analytic_pair(), Binumber(3, 4, E), {0.5, 0.5});
  CHECK(rel_err(c.value({2, -1}), Binumber(3, 4, E)) <= 1e-15);
  CHECK(c.order == 0);
}

TEST_CASE("formal powers by the recursion") {
  const auto seq = f_sequence();
  for (int n = 1; n <= 2; ++n)
    for (Binumber a : {one(), unit()}) {
      const FormalPower Z = formal_power(seq, n, a, z0);
      CHECK(Z.order == n);
      CHECK(Z.pair_index == 0);
      for (Point p : random_points(20, 0.5, 3, 0.5, 3)) CHECK(rel_err(Z.value(p), oracles::zf(n, a, z0)(p)) <= 1e-10);
    }
  const FormalPower Z0 = formal_power_zero(seq.pair(1), one(), z0, 1);
  const FormalPower Z1 = formal_power_next(seq, Z0);
  CHECK(Z1.pair_index == 0);
  CHECK(rel_err(Z1.value({2, 2}), oracles::zf(1, one(), z0)({2, 2})) <= 1e-12);

  const GeneratingSequence finite({contexts::main_pair(contexts::f_y2())});
  CHECK(kind_of([&] { (void)formal_power(finite, 1, one(), z0); }) == ErrorKind::SequenceExhausted);
  CHECK(kind_of([&] { (void)finite.pair(-1); }) == ErrorKind::SequenceExhausted);
  CHECK(seq.has(-3));
}

TEST_CASE("formal power properties") {
  const auto seq = f_sequence();
  const MainVekua eq = make_vekua(contexts::f_y2());
  SUBCASE("asymptotics") {
    for (int n = 0; n <= 3; ++n)
      for (Binumber a : {one(), unit(), Binumber(0.6, -0.8, E)}) {
        const FormalPower Z = formal_power(seq, n, a, z0);
        for (Point dir : {Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}}) {
          double prev = 1e300;
          for (double r : {1e-2, 1e-3, 1e-4}) {
            const Point p = z0 + r * dir;
            const Binumber zz(r * dir.x, r * dir.y, E);
            const double dev = norm(Z.value(p) / (a * pow(zz, n)) - one());
            if (r == 1e-3) CHECK(dev <= 0.05);
            CHECK((dev <= prev || dev <= 1e-10));
            prev = dev;
          }
        }
      }
  }
  SUBCASE("vekua residual and linearity") {
    const Binumber a(0.7, -1.3, E);
    const FormalPower Za = formal_power(seq, 2, a, z0), Z1 = formal_power(seq, 2, one(), z0),
                      Zi = formal_power(seq, 2, unit(), z0);
    for (Point p : random_points(20, 0.5, 3, 0.5, 3)) {
      CHECK(vekua_residual(eq, Za.value, p) <= 1e-8);
      CHECK(rel_err(Za.value(p), Z1.value(p) * a.re + Zi.value(p) * a.im) <= 1e-12);
    }
  }
  SUBCASE("differential relation") {
    for (int n = 1; n <= 3; ++n) {
      const Binumber a(0.3, 0.5, E);
      const FormalPower Zn = formal_power(seq, n, a, z0, 0), Zm = formal_power(seq, n - 1, a, z0, 1);
      for (Point p : random_points(50, 0.5, 3, 0.5, 3, n))
        CHECK(norm(fg_derivative(seq.pair(0), Zn.value, p) - Zm.value(p) * double(n)) <=
              1e-9 * std::max(1.0, norm(Zm.value(p)) * n));
    }
  }
}

TEST_CASE("successor pairs") {
  const auto f = contexts::f_y2();
  const auto seq = f_sequence();
  SUBCASE("period one for f depending on y only") {
    const GeneratingPair next = successor_from_powers(seq.pair(0), formal_power(seq, 1, one(), z0),
                                                      formal_power(seq, 1, unit(), z0));
    for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
      CHECK(std::fabs((next.F(p) / f.f(p)).im) <= 1e-12);
      CHECK(std::fabs((next.G(p) / seq.pair(0).G(p)).im) <= 1e-12);
    }
  }
  SUBCASE("sequence for g from closed-form powers") {
    const GeneratingPair gp = contexts::main_pair(contexts::g_1xy3());
    const FormalPower a{1, z0, one(), oracles::zg(1, one(), z0), 0};
    const FormalPower b{1, z0, unit(), oracles::zg(1, unit(), z0), 0};
    const GeneratingPair p1 = successor_from_powers(gp, a, b);
    const FormalPower c{1, z0, one(), fg_derivative(gp, oracles::zg(2, one(), z0)) * 0.5, 1};
    const FormalPower d{1, z0, unit(), fg_derivative(gp, oracles::zg(2, unit(), z0)) * 0.5, 1};
    const GeneratingPair p2 = successor_from_powers(p1, c, d);
    const FormalPower c2{1, z0, one(), fg_derivative(gp, oracles::zg(2, one(), z0)), 1};
    const FormalPower d2{1, z0, unit(), fg_derivative(gp, oracles::zg(2, unit(), z0)), 1};
    const GeneratingPair p2u = GeneratingPair::make(fg_derivative(p1, c2.value), fg_derivative(p1, d2.value));
    for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
      CHECK(rel_err(p1.F(p), oracles::F1(z0)(p)) <= 1e-12);
      CHECK(rel_err(p1.G(p), oracles::G1(z0)(p)) <= 1e-12);
      CHECK(rel_err(p2.F(p), oracles::F2(z0)(p)) <= 1e-10);
      CHECK(rel_err(p2.G(p), oracles::G2(z0)(p)) <= 1e-10);
      // without the 1/n factor of the differential relation the pair doubles
      CHECK(rel_err(p2u.F(p), oracles::F2(z0)(p) * 2.0) <= 1e-10);
      CHECK(rel_err(p2u.G(p), oracles::G2(z0)(p) * 2.0) <= 1e-10);
    }
  }
  SUBCASE("non-generating successor is rejected") {
    const FormalPower a = formal_power(seq, 1, one(), z0), b = formal_power(seq, 1, unit(), z0);
    CHECK_THROWS_AS((void)successor_from_powers(seq.pair(0), b, a), ContractViolation);
    const FormalPower bneg{1, z0, unit(), b.value * -1.0, 0};
    CHECK(kind_of([&] { (void)successor_from_powers(seq.pair(0), a, bneg); }) == ErrorKind::NotGeneratingPair);
  }
}

TEST_CASE("higher derivatives") {
  const auto seq = f_sequence();
  const FormalPower Z2 = formal_power(seq, 2, unit(), z0);
  const FormalPower Z0 = formal_power(seq, 0, unit(), z0, 2);
  const BiField d2 = higher_derivative(seq, Z2.value, 2);
  for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
    CHECK(rel_err(higher_derivative(seq, Z2.value, 0)(p), Z2.value(p)) == 0.0);
    CHECK(rel_err(d2(p), Z0.value(p) * 2.0) <= 1e-9);
    CHECK(norm(higher_derivative(seq, seq.pair(0).F, 1)(p)) <= 1e-13);
  }
  const GeneratingSequence finite({seq.pair(0)});
  CHECK(kind_of([&] { (void)higher_derivative(finite, Z2.value, 2); }) == ErrorKind::SequenceExhausted);
}

TEST_CASE("formal polynomial fit") {
  const auto seq = f_sequence();
  const auto f = contexts::f_y2();
  std::vector<FormalPower> basis;
  for (int n = 0; n <= 2; ++n)
    for (Binumber a : {one(), unit()}) basis.push_back(formal_power(seq, n, a, z0));
  const auto samples = random_points(30, 0.6, 1.4, 1.6, 2.4);
  const FitResult r = formal_polynomial_fit(basis, basis[4].value, samples);
  CHECK(r.residual <= 1e-9);
  for (std::size_t k = 0; k < basis.size(); ++k) CHECK(std::fabs(r.coeffs[k] - (k == 4 ? 1.0 : 0.0)) <= 1e-9);

  const FitResult rf = formal_polynomial_fit(basis, f.f, samples);
  CHECK(rf.coeffs[0] == doctest::Approx(z0.y * z0.y));
  for (std::size_t k = 1; k < basis.size(); ++k) CHECK(std::fabs(rf.coeffs[k]) <= 1e-9);

  std::vector<FormalPower> dup{basis[0], basis[0]};
  CHECK(kind_of([&] { (void)formal_polynomial_fit(dup, f.f, samples); }) == ErrorKind::Fit);
  CHECK(kind_of([&] { (void)formal_polynomial_fit(basis, f.f, {z0}); }) == ErrorKind::Fit);

  SUBCASE("misfit decreases with the order of the basis") {
    // e^x (sin y / y - cos y) solves (-Delta + 2/y^2) u = 0
    const BiField W1 = BiField::analytic(E, f.domain, [](const auto& x, const auto& y) {
      return exp(x) * (sin(y) / y - cos(y));
    });
    const BiField W = W1 + unit() * conjugate_imag(f, W1, z0);
    std::vector<FormalPower> b;
    double prev = 1e300;
    for (int n = 0; n <= 4; ++n) {
      for (Binumber a : {one(), unit()}) b.push_back(formal_power(seq, n, a, z0));
      const double res = formal_polynomial_fit(b, W, samples).residual;
      CHECK(res < prev);
      prev = res;
    }
    CHECK(prev <= 1e-3);
  }
}
