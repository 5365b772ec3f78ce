// Acceptance run: one PASS/FAIL line per criterion at the stated tolerances,
// followed by indented informational lines.
// Usage: acceptance [--criterion N]...   (default: all of 1..8)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "pseudoanalytic/antigradient.hpp"
#include "pseudoanalytic/contexts.hpp"
#include "pseudoanalytic/error.hpp"
#include "pseudoanalytic/grid.hpp"
#include "pseudoanalytic/oracles.hpp"
#include "pseudoanalytic/transplant.hpp"

using namespace pseudoanalytic;
using pseudoanalytic::cli::loglog_slope;
using pseudoanalytic::cli::max_rel_err;
using pseudoanalytic::cli::random_points;

namespace {

constexpr Signature E = Signature::Elliptic;
constexpr Signature H = Signature::Hyperbolic;
const Point z0{1, 2};
const Box square_box{0.5, 3, 0.5, 3};
const std::vector<Point> axes{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
const std::vector<Point> diagonals{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

/// Collects the sub-results of one criterion and prints them.
class Report {
 public:
  explicit Report(int n) : n_(n) {}

  void require(const std::string& what, double measured, double tol) {
    const bool ok = std::isfinite(measured) && measured <= tol;
    pass_ = pass_ && ok;
    lines_.push_back("  " + std::string(ok ? "ok   " : "FAIL ") + what + ": " + sci(measured) + " (tol " + sci(tol) + ")");
  }
  void require_range(const std::string& what, double lo, double hi, double a, double b) {
    const bool ok = lo >= a && hi <= b;
    pass_ = pass_ && ok;
    std::ostringstream os;
    os << std::setprecision(6) << "  " << (ok ? "ok   " : "FAIL ") << what << ": [" << lo << ", " << hi << "] (required ["
       << a << ", " << b << "])";
    lines_.push_back(os.str());
  }
  void info(const std::string& s) { lines_.push_back("  info " + s); }
  void error(const std::string& s) {
    pass_ = false;
    lines_.push_back("  FAIL error: " + s);
  }

  bool print(const std::string& title) const {
    std::cout << "criterion " << n_ << ": " << (pass_ ? "PASS" : "FAIL") << "  " << title << '\n';
    for (const auto& l : lines_) std::cout << l << '\n';
    std::cout.flush();
    return pass_;
  }

 private:
  int n_;
  bool pass_ = true;
  std::vector<std::string> lines_;
};

std::vector<Point> grid50() { return GridSpec{50, 50, square_box}.points(); }
GeneratingSequence f_sequence() { return GeneratingSequence::constant(contexts::main_pair(contexts::f_y2())); }
std::vector<Binumber> one_and_unit(Signature s = E) { return {Binumber::real(1.0, s), Binumber::unit(s)}; }
std::string coeff_name(const Binumber& a) { return a.im == 0.0 ? "1" : "i"; }

template <class Fn>
double worst(const std::vector<Point>& pts, Fn fn) {
  std::vector<double> v(pts.size(), 0.0);
  parallel_for(pts.size(), [&](std::size_t i) { v[i] = fn(pts[i]); });
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

BiField fd_copy(const BiField& W, double h = 1e-5) {
  return BiField::finite_difference(W.sig(), W.domain(), [W](Point p) { return W(p); }, h);
}

FormalPower g_power(int n, const Binumber& a) {
  return transplant_formal_power(contexts::f_y2(), contexts::g_1xy3(), formal_power(f_sequence(), n, a, z0));
}

FormalPower xy_kernel(const Binumber& a) {
  TransplantConfig cfg;
  cfg.base_point = Point{1e-6, 1e-6};
  return cauchy_kernel(contexts::g_xy(), a, {1, 5}, cfg);
}

/// Z_{y^2}^(-1)(a, c; .): the pole -i a/(z - c) transplanted to f = y,
/// multiplied by i (a solution for 1/y), transplanted to f = y^2.
FormalPower f_y2_kernel(const Binumber& a, Point c, Point base) {
  TransplantConfig cfg;
  cfg.base_point = base;
  const auto unit_ctx = contexts::restrict(contexts::unit(), Domain::quadrant());
  const auto yc = make_context(BiField::analytic(E, Domain::quadrant(), [](const auto&, const auto& y) { return y; }));
  const FormalPower p = simple_pole(E, a * Binumber(0, -1, E), c, Domain::quadrant());
  const FormalPower zy = transplant_negative_power(unit_ctx, yc, p, cfg);
  const FormalPower zr{-1, c, a, to_reciprocal(zy.value), 0};
  return transplant_negative_power(reciprocal_context(yc), contexts::f_y2(), zr, cfg);
}

/// Largest deviation of (a - b)/w from its mean over the points.
double spread(const BiField& a, const BiField& b, const BiField& w, const std::vector<Point>& pts) {
  std::vector<double> d;
  for (Point p : pts) d.push_back((a(p).re - b(p).re) / w(p).re);
  double mean = 0.0;
  for (double v : d) mean += v;
  mean /= static_cast<double>(d.size());
  double s = 0.0;
  for (double v : d) s = std::max(s, std::fabs(v - mean));
  return s;
}

bool criterion1() {
  Report r(1);
  const auto pts = grid50();
  const auto t0 = std::chrono::steady_clock::now();
  double err = 0.0;
  for (int n = 0; n <= 2; ++n)
    for (const Binumber& a : one_and_unit()) {
      const double e = max_rel_err(formal_power(f_sequence(), n, a, z0).value, oracles::zf(n, a, z0), pts);
      r.info("Z_f^(" + std::to_string(n) + ")(" + coeff_name(a) + ") max rel err " + sci(e));
      err = std::max(err, e);
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.require("max relative error, 50x50 grid", err, 1e-6);
  r.require("runtime [s]", secs, 30.0);
  return r.print("positive formal powers of f = y^2 against closed forms");
}

bool criterion2() {
  Report r(2);
  const auto pts = grid50();
  double err = 0.0;
  for (int n = 1; n <= 2; ++n)
    for (const Binumber& a : one_and_unit()) {
      const double e = max_rel_err(g_power(n, a).value, oracles::zg(n, a, z0), pts);
      r.info("Z_g^(" + std::to_string(n) + ")(" + coeff_name(a) + ") max rel err " + sci(e));
      err = std::max(err, e);
    }
  r.require("max relative error, 50x50 grid", err, 1e-6);
  const BiField Z2 = formal_power(f_sequence(), 2, Binumber::real(1.0, E), z0).value;
  r.info("Z_f^(2)(1) against the -2 y0^5 y form " + sci(max_rel_err(Z2, oracles::zf(2, Binumber::real(1.0, E), z0), pts)) +
         ", against the printed -2 y0 y form " +
         sci(max_rel_err(Z2, oracles::zf(2, Binumber::real(1.0, E), z0, true), pts)));
  return r.print("transplanted powers of g = (1 + x y^3)/y against closed forms");
}

bool criterion3() {
  Report r(3);
  const auto pts = grid50();
  const auto pairs = successor_sequence(contexts::g_1xy3(), 2, z0, contexts::f_y2());
  r.require("F1 max relative error", max_rel_err(pairs[1].F, oracles::F1(z0), pts), 1e-6);
  r.require("G1 max relative error", max_rel_err(pairs[1].G, oracles::G1(z0), pts), 1e-6);
  auto real_constant = [&](const BiField& W, const std::function<Binumber(Point)>& ref) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, im = 0.0;
    for (Point p : pts) {
      const Binumber q = W(p) / ref(p);
      lo = std::min(lo, q.re);
      hi = std::max(hi, q.re);
      im = std::max(im, std::fabs(q.im));
    }
    return std::max(im, hi - lo);
  };
  r.require("F2 / (y/y0)^2 real and constant",
            real_constant(pairs[2].F, [](Point p) { return Binumber::real(p.y * p.y / (z0.y * z0.y), E); }), 1e-6);
  r.require("G2 / (i (y0/y)^2) real and constant",
            real_constant(pairs[2].G, [](Point p) { return Binumber(0, z0.y * z0.y / (p.y * p.y), E); }), 1e-6);
  auto im_err = [&](const std::function<double(Point, Point)>& want) {
    return worst(pts, [&](Point p) { return std::fabs((conj(pairs[1].F(p)) * pairs[1].G(p)).im - want(p, z0)); });
  };
  r.require("Im(conj(F1) G1) = 1/2 (y/y0)^2 g(z0)/g(z)", im_err(oracles::im_F1G1_stated), 1e-8);
  r.info("Im(conj(F1) G1) = (y/y0)^2 g(z0)/g(z) holds to " + sci(im_err(oracles::im_F1G1)));
  return r.print("generating sequence of g = (1 + x y^3)/y");
}

bool criterion4() {
  Report r(4);
  const Point c{1, 5}, base{1e-6, 1e-6};
  const FormalPower K = xy_kernel(Binumber::real(1.0, E));
  std::vector<Point> pts;
  for (Point p : GridSpec{100, 100, Box{0.1, 4, 0.1, 8}}.points())
    if (distance(p, c) > 0.05) pts.push_back(p);
  const double printed = worst(pts, [&](Point p) {
    const Binumber w = oracles::kernel_printed(p, c);
    return norm(K.value(p) - w) / norm(w);
  });
  r.require("max relative error against the printed closed form, 100x100 grid", printed, 1e-6);
  const double corrected = worst(pts, [&](Point p) {
    const Binumber w = oracles::kernel_corrected(p, c, make_path(base, p, K.value.domain()).vertices);
    return norm(K.value(p) - w) / norm(w);
  });
  r.info("against the corrected closed form (log |z - z0|^2, continuous argument) " + sci(corrected));
  auto h_range = [&](double rad) {
    std::vector<double> h(720);
    parallel_for(h.size(), [&](std::size_t k) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(h.size());
      const Point p{c.x + rad * std::cos(th), c.y + rad * std::sin(th)};
      h[k] = norm(Binumber(p.x - c.x, p.y - c.y, E) * K.value(p));
    });
    return std::pair{*std::min_element(h.begin(), h.end()), *std::max_element(h.begin(), h.end())};
  };
  const auto [lo, hi] = h_range(0.02);
  r.require_range("H on |z - z0| = 0.02", lo, hi, 0.99, 1.01);
  const auto [lo3, hi3] = h_range(1e-3);
  std::ostringstream os;
  os << std::setprecision(6) << "H on |z - z0| = 1e-3 lies in [" << lo3 << ", " << hi3 << "]";
  r.info(os.str());
  return r.print("Cauchy kernel of g = x y, z0 = (1, 5)");
}

bool criterion5() {
  Report r(5);
  const auto f = contexts::f_y2(), g = contexts::g_1xy3();
  const MainVekua ef = make_vekua(f), eg = make_vekua(g), exy = make_vekua(contexts::g_xy());
  const auto pts = random_points(50, square_box, 11);
  auto rel_res = [&](const MainVekua& eq, const BiField& W, const std::vector<Point>& at) {
    return worst(at, [&](Point p) { return vekua_residual(eq, W, p) / std::max(1.0, norm(W(p))); });
  };
  double vek = 0.0, sre = 0.0, sim = 0.0;
  for (int n = 0; n <= 2; ++n)
    for (const Binumber& a : one_and_unit()) {
      const BiField Zf = formal_power(f_sequence(), n, a, z0).value;
      vek = std::max(vek, rel_res(ef, Zf, pts));
      const auto few = random_points(8, square_box, 12 + n);
      sre = std::max(sre, worst(few, [&](Point p) { return schrodinger_residual(f.q, fd_copy(real_part(Zf)), p); }));
      sim = std::max(sim, worst(few, [&](Point p) { return schrodinger_residual(f.q1, fd_copy(imag_part(Zf)), p); }));
      if (n == 0) continue;
      const BiField Zg = g_power(n, a).value;
      vek = std::max(vek, rel_res(eg, Zg, pts));
      sre = std::max(sre, worst(few, [&](Point p) { return schrodinger_residual(g.q, fd_copy(real_part(Zg)), p); }));
      sim = std::max(sim, worst(few, [&](Point p) { return schrodinger_residual(g.q1, fd_copy(imag_part(Zg)), p); }));
    }
  std::vector<Point> kpts;
  for (Point p : random_points(50, Box{0.1, 4, 0.1, 8}, 13))
    if (distance(p, {1, 5}) > 0.05) kpts.push_back(p);
  for (const Binumber& a : one_and_unit()) vek = std::max(vek, rel_res(exy, xy_kernel(a).value, kpts));
  std::vector<Point> fpts;
  for (Point p : pts)
    if (distance(p, z0) > 0.1) fpts.push_back(p);
  const FormalPower Zm1 = f_y2_kernel(Binumber(0.3, 0.7, E), z0, {2.5, 0.5});
  vek = std::max(vek, rel_res(ef, Zm1.value, fpts));
  for (const auto& Z : negative_power_ladder(f_sequence(), Zm1, 3)) vek = std::max(vek, rel_res(ef, Z.value, fpts));
  r.require("Vekua residual of every constructed power and kernel (analytic)", vek, 1e-8);
  r.require("Re parts solve the q equation (finite differences)", sre, 1e-5);
  r.require("Im parts solve the q1/q2 equation (finite differences)", sim, 1e-5);

  std::mt19937 rng(8);
  double fac = 0.0;
  for (int k = 0; k < 10; ++k) {
    const BiField phi = cli::random_poly(E, rng, 4, f.domain);
    fac = std::max(fac, worst(random_points(5, square_box, 20 + k), [&](Point p) { return factorization_residual(f, phi, p); }));
  }
  r.require("factorization residual, 10 random phi", fac, 1e-7);
  double rel = 0.0;
  for (int k = 0; k < 10; ++k) {
    const BiField om = cli::random_poly(E, rng, 3) + Binumber::unit(E) * cli::random_poly(E, rng, 3);
    rel = std::max(rel, worst(random_points(5, square_box, 40 + k), [&](Point p) { return relation_check(f.f, om, p); }));
  }
  r.require("V B = Pi residual, 10 random omega", rel, 1e-7);
  return r.print("residual suite");
}

bool criterion6() {
  Report r(6);
  double dev = 0.0;
  auto slope = [&](const std::string& what, const BiField& Z, Point c, int n, const std::vector<Point>& dirs) {
    const double s = loglog_slope(Z, c, dirs);
    r.info(what + " slope " + std::to_string(s));
    dev = std::max(dev, std::fabs(s - n));
  };
  for (int n = 0; n <= 2; ++n)
    for (const Binumber& a : one_and_unit()) {
      slope("Z_f^(" + std::to_string(n) + ")(" + coeff_name(a) + ")", formal_power(f_sequence(), n, a, z0).value, z0, n, axes);
      if (n > 0) slope("Z_g^(" + std::to_string(n) + ")(" + coeff_name(a) + ")", g_power(n, a).value, z0, n, axes);
    }
  for (const Binumber& a : one_and_unit()) slope("kernel g = x y (" + coeff_name(a) + ")", xy_kernel(a).value, {1, 5}, -1, diagonals);
  const FormalPower Zm1 = f_y2_kernel(Binumber(0.3, 0.7, E), z0, {2.5, 0.5});
  slope("Z_f^(-1)", Zm1.value, z0, -1, diagonals);
  for (const auto& Z : negative_power_ladder(f_sequence(), Zm1, 3))
    slope("Z_f^(" + std::to_string(Z.order) + ")", Z.value, z0, Z.order, diagonals);
  const auto useq = GeneratingSequence::constant(contexts::main_pair(contexts::unit()));
  for (const auto& Z : negative_power_ladder(useq, simple_pole(E, Binumber(0.5, -1.5, E), {0.2, -0.1}, Domain::plane()), 3))
    slope("analytic ladder order " + std::to_string(Z.order), Z.value, {0.2, -0.1}, Z.order, diagonals);
  r.require("max |slope - n| over radii 1e-2..1e-4", dev, 0.1);
  return r.print("order of formal powers from log-log slopes");
}

bool criterion7() {
  Report r(7);
  const auto sq = random_points(50, Box{-1, 1, -1, 1}, 14);
  const BiField u = BiField::analytic(H, Domain::plane(), [](const auto& x, const auto& t) { return x * t; });
  const BiField W2 = conjugate_imag(contexts::hyperbolic_unit(), u, {0.2, -0.3});
  const BiField half = BiField::analytic(H, Domain::plane(), [](const auto& x, const auto& t) { return (x * x + t * t) * 0.5; });
  r.require("W2 - (x^2 + t^2)/2 constant (spread)", spread(W2, half, BiField::constant(Binumber::real(1.0, H)), sq), 1e-10);
  const BiField W = u + Binumber::unit(H) * W2;
  r.require("hyperbolic Cauchy-Riemann residual", worst(sq, [&](Point p) { return cli::cauchy_riemann_residual(W, p); }), 1e-10);

  const BiField Z = BiField::analytic(H, Domain::plane(), [](const auto& x, const auto& t) {
    const auto z = x + t * Binumber::unit(H);
    return z * z;
  });
  const Point base{0.3, -0.2};
  TransplantConfig cfg;
  cfg.base_point = base;
  cfg.constant = ConstantPolicy::pin_at(base, 0.0);
  const BiField w = transplant(contexts::hyperbolic_unit(), contexts::hyperbolic_quadric(), Z, cfg);
  cfg.constant = ConstantPolicy::pin_at(base, Z(base).im);
  const BiField back = transplant(contexts::hyperbolic_quadric(), contexts::hyperbolic_unit(), w, cfg);
  r.require("transplant round trip f = 1 <-> f = 1 + x^2 + t^2", max_rel_err(back, Z, sq), 1e-7);

  const auto h = contexts::hyperbolic_quadric();
  std::mt19937 rng(9);
  double kg = 0.0;
  for (int k = 0; k < 10; ++k) {
    const BiField phi = fd_copy(cli::random_poly(H, rng, 4));
    kg = std::max(kg, worst(random_points(5, Box{-1, 1, -1, 1}, 60 + k), [&](Point p) { return factorization_residual(h, phi, p); }));
  }
  r.require("Klein-Gordon factorization residual (finite differences)", kg, 1e-5);
  return r.print("hyperbolic suite");
}

bool criterion8() {
  Report r(8);
  const auto f = contexts::f_y2();
  const auto pts = random_points(50, square_box, 15);
  const BiField W1 = real_part(formal_power(f_sequence(), 2, Binumber(1, 1, E), z0).value);
  const BiField W2 = conjugate_imag(f, W1, z0);
  const BiField R = conjugate_real(f, W2, z0);
  r.require("conjugate_real(conjugate_imag(W1)) - W1 constant, relative to f", spread(R, W1, f.f, pts), 1e-7);
  ConjugateCfg pin;
  pin.constant = ConstantPolicy::pin_at(z0, W1(z0).re);
  const BiField Rp = conjugate_real(f, W2, z0, pin);
  r.info("with the constant pinned at z0: max |R - W1| " +
         sci(worst(pts, [&](Point p) { return std::fabs(Rp(p).re - W1(p).re); })));

  double tt = 0.0;
  for (int n = 1; n <= 2; ++n)
    for (const Binumber& a : one_and_unit()) {
      const FormalPower Zf = formal_power(f_sequence(), n, a, z0);
      const FormalPower Zg = transplant_formal_power(f, contexts::g_1xy3(), Zf);
      tt = std::max(tt, max_rel_err(transplant_formal_power(contexts::g_1xy3(), f, Zg).value, Zf.value, pts));
    }
  r.require("T_{g,f} T_{f,g} = identity", tt, 1e-7);

  double adj = 0.0;
  for (const auto& name : {"f_y2", "g_1xy3"}) {
    const GeneratingPair p = contexts::main_pair(contexts::by_name(name));
    const GeneratingPair back = adjoint(adjoint(p));
    adj = std::max({adj, max_rel_err(back.F, p.F, pts), max_rel_err(back.G, p.G, pts)});
  }
  const GeneratingPair s1 = successor_sequence(contexts::g_1xy3(), 1, z0, contexts::f_y2())[1];
  const GeneratingPair b1 = adjoint(adjoint(s1));
  adj = std::max({adj, max_rel_err(b1.F, s1.F, pts), max_rel_err(b1.G, s1.G, pts)});
  r.require("adjoint involution", adj, 1e-10);
  return r.print("round trips");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      const int n = std::atoi(argv[++i]);
      if (n < 1 || n > 8) {
        std::cerr << "criterion must lie in 1..8\n";
        return 2;
      }
      wanted.insert(n);
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 2;
    }
  }
  if (wanted.empty()) wanted = {1, 2, 3, 4, 5, 6, 7, 8};
  const std::vector<std::function<bool()>> all{criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (int n : wanted) {
    bool ok = false;
    try {
      ok = all[n - 1]();
    } catch (const std::exception& e) {
      std::cout << "criterion " << n << ": FAIL  error: " << e.what() << '\n';
    }
    if (!ok) ++failed;
  }
  std::cout << "acceptance: " << wanted.size() - failed << "/" << wanted.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
