#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pseudoanalytic/contexts.hpp"
#include "pseudoanalytic/error.hpp"
#include "pseudoanalytic/oracles.hpp"
#include "pseudoanalytic/transplant.hpp"
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

GeneratingSequence f_sequence() { return GeneratingSequence::constant(contexts::main_pair(contexts::f_y2())); }

/// Least-squares slope of log|Z| against log r, averaged over directions.
double loglog_slope(const BiField& Z, Point c, const std::vector<Point>& dirs) {
  double total = 0;
  for (Point d : dirs) {
    const double len = std::hypot(d.x, d.y);
    std::vector<double> lx, ly;
    for (double r : {1e-2, 3e-3, 1e-3, 3e-4, 1e-4}) {
      lx.push_back(std::log(r));
      ly.push_back(std::log(norm(Z(c + (r / len) * d))));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i], my += ly[i];
    mx /= lx.size();
    my /= ly.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) sxy += (lx[i] - mx) * (ly[i] - my), sxx += (lx[i] - mx) * (lx[i] - mx);
    total += sxy / sxx;
  }
  return total / static_cast<double>(dirs.size());
}

const std::vector<Point> axes{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
const std::vector<Point> diagonals{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

SchrodingerContext y_context() {
  return make_context(BiField::analytic(E, Domain::quadrant(), [](const auto&, const auto& y) { return y; }));
}

/// Z_{y^2}^(-1)(a, c; .) from a pole: transplant to f = y, multiply by i
/// (the 1/y equation), transplant to f = y^2.
FormalPower f_y2_kernel(const Binumber& a, Point c, Point base) {
  TransplantConfig cfg;
  cfg.base_point = base;
  const auto unit_ctx = contexts::restrict(contexts::unit(), Domain::quadrant());
  const auto yc = y_context();
  const FormalPower p = simple_pole(E, a * Binumber(0, -1, E), c, Domain::quadrant());
  const FormalPower zy = transplant_negative_power(unit_ctx, yc, p, cfg);
  const FormalPower zr{-1, c, a, to_reciprocal(zy.value), 0};
  return transplant_negative_power(reciprocal_context(yc), contexts::f_y2(), zr, cfg);
}

}  // namespace

TEST_CASE("potential matching") {
  CHECK_NOTHROW(check_same_potential(contexts::f_y2(), contexts::g_1xy3()));
  CHECK(kind_of([] { check_same_potential(contexts::f_y2(), contexts::g_xy()); }) == ErrorKind::ContextMismatch);
  CHECK(kind_of([] { check_same_potential(contexts::unit(), contexts::hyperbolic_unit()); }) ==
        ErrorKind::ContextMismatch);
}

TEST_CASE("transplanting to the same equation is the identity") {
  const auto f = contexts::f_y2();
  const BiField W = oracles::zf(2, Binumber(0.2, 0.9, E), {1.3, 1.7});
  TransplantConfig cfg;
  cfg.base_point = Point{2, 1};
  cfg.constant = ConstantPolicy::pin_at({2, 1}, W({2, 1}).im);
  const BiField w = transplant(f, f, W, cfg);
  for (Point p : random_points(20, 0.5, 3, 0.5, 3)) CHECK(rel_err(w(p), W(p)) <= 1e-10);
}

TEST_CASE("transplanted formal powers match the closed forms") {
  const auto f = contexts::f_y2(), g = contexts::g_1xy3();
  const auto seq = f_sequence();
  for (int n = 0; n <= 2; ++n)
    for (Binumber a : {one(), unit()}) {
      const FormalPower Zg = transplant_formal_power(f, g, formal_power(seq, n, a, z0));
      CHECK(Zg.order == n);
      CHECK(Zg.center == z0);
      for (Point p : random_points(20, 0.5, 3, 0.5, 3)) CHECK(rel_err(Zg.value(p), oracles::zg(n, a, z0)(p)) <= 1e-10);
    }
}

TEST_CASE("transplant properties") {
  const auto f = contexts::f_y2(), g = contexts::g_1xy3();
  const auto seq = f_sequence();
  const MainVekua eg = make_vekua(g);
  const Binumber a(-0.4, 0.8, E);
  const FormalPower Zf = formal_power(seq, 2, a, z0);
  const FormalPower Zg = transplant_formal_power(f, g, Zf);
  const FormalPower back = transplant_formal_power(g, f, Zg);
  const BiField printed_q2 = g.q1 * 0.5;
  for (Point p : random_points(50, 0.5, 3, 0.5, 3)) {
    CHECK(Zg.value(p).re == Zf.value(p).re);
    CHECK(rel_err(back.value(p), Zf.value(p)) <= 1e-7);
    CHECK(vekua_residual(eg, Zg.value, p) <= 1e-8);
  }
  for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
    CHECK(schrodinger_residual(g.q, real_part(Zg.value), p) <= 1e-8);
    CHECK(schrodinger_residual(g.q1, imag_part(Zg.value), p) <= 1e-8);
  }
  // the printed closed form of q2 is half the defined potential
  CHECK(schrodinger_residual(printed_q2, imag_part(Zg.value), {2.0, 1.5}) > 1e-2);
  for (int n = 1; n <= 2; ++n)
    for (Binumber b : {one(), unit()}) {
      const FormalPower Z = transplant_formal_power(f, g, formal_power(seq, n, b, z0));
      CHECK(loglog_slope(Z.value, z0, axes) == doctest::Approx(n).epsilon(0.1 / n));
      const Point q = z0 + 1e-3 * Point{0.6, 0.8};
      CHECK(norm(Z.value(q) / (b * pow(Binumber(0.6e-3, 0.8e-3, E), n)) - one()) <= 0.05);
    }
  CHECK(kind_of([&] { (void)transplant_formal_power(f, contexts::g_xy(), Zf); }) == ErrorKind::ContextMismatch);
  TransplantConfig missing;
  CHECK_THROWS_AS((void)transplant(f, g, Zf.value, missing), ContractViolation);
}

TEST_CASE("Cauchy kernel for g = x y") {
  const auto g = contexts::g_xy();
  const MainVekua eq = make_vekua(g);
  const Point c{1, 5};
  TransplantConfig cfg;
  cfg.base_point = Point{1e-6, 1e-6};
  for (Binumber a : {one(), unit(), Binumber(0.6, 0.8, E)}) {
    const FormalPower K = cauchy_kernel(g, a, c, cfg);
    CHECK(K.order == -1);
    for (Point p : random_points(20, 0.1, 4, 0.1, 8)) {
      if (distance(p, c) < 0.05) continue;
      CHECK(vekua_residual(eq, K.value, p) <= 1e-8 * std::max(1.0, norm(K.value(p))));
      if (a == one()) {
        const Path path = make_path(*cfg.base_point, p, K.value.domain());
        CHECK(rel_err(K.value(p), oracles::kernel_corrected(p, c, path.vertices)) <= 1e-8);
      }
    }
    for (Point d : axes) {
      const Point q = c + 1e-5 * d;
      CHECK(norm(K.value(q) * Binumber(1e-5 * d.x, 1e-5 * d.y, E) - a) <= 1e-3);
    }
    CHECK(loglog_slope(K.value, c, diagonals) == doctest::Approx(-1).epsilon(0.1));
  }
  CHECK(kind_of([&] { (void)cauchy_kernel(g, one(), c, cfg).value(c); }) == ErrorKind::Domain);
  TransplantConfig straight = cfg;
  straight.path = PathPolicy::straight();
  const FormalPower Ks = cauchy_kernel(g, one(), c, straight);
  CHECK(kind_of([&] { (void)Ks.value({2 * c.x, 2 * c.y}); }) == ErrorKind::PathThroughPole);
  TransplantConfig none;
  CHECK_THROWS_AS((void)cauchy_kernel(g, one(), c, none), ContractViolation);
  CHECK(kind_of([&] { (void)cauchy_kernel(contexts::g_1xy3(), one(), c, cfg); }) == ErrorKind::ContextMismatch);
}

TEST_CASE("trivial kernels") {
  const auto u = contexts::unit();
  TransplantConfig cfg;
  cfg.base_point = Point{-3, -4};
  const Point c{0.5, 0.5};
  const Binumber a(2, 1, E);
  const FormalPower K = cauchy_kernel(u, a, c, cfg);
  // the imaginary part is anchored to vanish at the base point
  const double anchor = (a / Binumber(-3 - c.x, -4 - c.y, E)).im;
  for (Point p : random_points(20, -2, 2, -2, 2)) {
    const Binumber want = a / (Binumber(p.x, p.y, E) - Binumber(c.x, c.y, E)) - Binumber(0, anchor, E);
    CHECK(rel_err(K.value(p), want) <= 1e-9);
  }
}

TEST_CASE("negative power ladder") {
  const auto seq1 = GeneratingSequence::constant(contexts::main_pair(contexts::unit()));
  const Point c{0.2, -0.1};
  const Binumber a(0.5, -1.5, E);
  const FormalPower pole = simple_pole(E, a, c, Domain::plane());
  const auto ladder = negative_power_ladder(seq1, pole, 4);
  REQUIRE(ladder.size() == 3);
  for (const auto& Z : ladder)
    for (Point p : random_points(10, -2, 2, -2, 2)) {
      const Binumber w = a * pow(Binumber(p.x - c.x, p.y - c.y, E), Z.order);
      CHECK(rel_err(Z.value(p), w) <= 1e-12);
    }
  const GeneratingSequence finite({contexts::main_pair(contexts::unit())});
  CHECK(kind_of([&] { (void)negative_power_ladder(finite, pole, 3); }) == ErrorKind::SequenceExhausted);
}

TEST_CASE("kernel and ladder for f = y^2") {
  const auto f = contexts::f_y2();
  const MainVekua eq = make_vekua(f);
  const Binumber a(0.3, 0.7, E);
  const FormalPower Z1 = f_y2_kernel(a, z0, {2.5, 0.5});
  const auto ladder = negative_power_ladder(f_sequence(), Z1, 3);
  REQUIRE(ladder.size() == 2);
  const std::vector<FormalPower> all{Z1, ladder[0], ladder[1]};
  for (const auto& Z : all) {
    const int n = -Z.order;
    for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
      if (distance(p, z0) < 0.1) continue;
      CHECK(vekua_residual(eq, Z.value, p) <= 1e-8 * std::max(1.0, norm(Z.value(p))));
    }
    for (Point d : diagonals) {
      const double r = 1e-4;
      const Binumber dz(r * d.x / std::sqrt(2.0), r * d.y / std::sqrt(2.0), E);
      CHECK(norm(Z.value(z0 + (r / std::sqrt(2.0)) * d) * pow(dz, n) - a) <= 1e-2 * norm(a));
    }
    CHECK(loglog_slope(Z.value, z0, diagonals) == doctest::Approx(-n).epsilon(0.1 / n));
  }
  // differential consistency of consecutive rungs
  for (Point p : random_points(5, 0.5, 3, 0.5, 3, 3)) {
    if (distance(p, z0) < 0.1) continue;
    CHECK(rel_err(fg_derivative(f_sequence().pair(0), Z1.value, p), ladder[0].value(p) * -1.0) <= 1e-9);
  }
}

TEST_CASE("hyperbolic transplant round trip") {
  const auto u = contexts::hyperbolic_unit(), g = contexts::hyperbolic_quadric();
  const MainVekua eq = make_vekua(g);
  const BiField W = BiField::analytic(H, Domain::plane(), [](const auto& x, const auto& t) {
    const auto z = x + t * Binumber::unit(H);
    return z * z;
  });
  const Point base{0.3, -0.2};
  TransplantConfig cfg;
  cfg.base_point = base;
  cfg.constant = ConstantPolicy::pin_at(base, 0.0);
  const BiField w = transplant(u, g, W, cfg);
  TransplantConfig back_cfg = cfg;
  back_cfg.constant = ConstantPolicy::pin_at(base, W(base).im);
  const BiField back = transplant(g, u, w, back_cfg);
  for (Point p : random_points(20, -1, 1, -1, 1)) {
    CHECK(vekua_residual(eq, w, p) <= 1e-9);
    CHECK(w(p).re == W(p).re);
    CHECK(rel_err(back(p), W(p)) <= 1e-9);
  }
}

TEST_CASE("generating sequences by transplantation") {
  const auto g = contexts::g_1xy3(), f = contexts::f_y2();
  const auto pairs = successor_sequence(g, 2, z0, f);
  REQUIRE(pairs.size() == 3);
  for (Point p : random_points(10, 0.5, 3, 0.5, 3)) {
    CHECK(rel_err(pairs[1].F(p), oracles::F1(z0)(p)) <= 1e-9);
    CHECK(rel_err(pairs[1].G(p), oracles::G1(z0)(p)) <= 1e-9);
    CHECK(rel_err(pairs[2].F(p), oracles::F2(z0)(p)) <= 1e-9);
    CHECK(rel_err(pairs[2].G(p), oracles::G2(z0)(p)) <= 1e-9);
  }
  const auto own = successor_sequence(f, 3, z0);
  REQUIRE(own.size() == 4);
  // successors are normalized to F(z0) = 1, G(z0) = i
  const double f0 = f.f(z0).re;
  for (int m = 1; m <= 3; ++m)
    for (Point p : random_points(5, 0.5, 3, 0.5, 3)) {
      CHECK(rel_err(own[m].F(p), own[0].F(p) / f0) <= 1e-9);
      CHECK(rel_err(own[m].G(p), own[0].G(p) * f0) <= 1e-9);
    }
}
