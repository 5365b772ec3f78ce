#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "pseudoanalytic/antigradient.hpp"
#include "pseudoanalytic/contexts.hpp"
#include "pseudoanalytic/error.hpp"
#include "pseudoanalytic/grid.hpp"
#include "pseudoanalytic/oracles.hpp"
#include "pseudoanalytic/transplant.hpp"

namespace pseudoanalytic::cli {

std::vector<Point> random_points(int n, Box box, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax), uy(box.ymin, box.ymax);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    const double x = ux(rng);
    out.push_back({x, uy(rng)});
  }
  return out;
}

BiField random_poly(Signature sig, std::mt19937& rng, int degree, Domain domain) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> c((degree + 1) * (degree + 2) / 2);
  for (auto& v : c) v = u(rng);
  return BiField::analytic(sig, std::move(domain), [c, degree](const auto& x, const auto& y) {
    auto r = x * 0.0;
    std::size_t k = 0;
    for (int a = 0; a <= degree; ++a)
      for (int b = 0; a + b <= degree; ++b) r = r + pow(x, a) * pow(y, b) * c[k++];
    return r;
  });
}

double max_rel_err(const BiField& got, const BiField& want, const std::vector<Point>& pts) {
  std::vector<double> e(pts.size(), 0.0);
  parallel_for(pts.size(), [&](std::size_t i) {
    const Binumber w = want(pts[i]);
    e[i] = norm(got(pts[i]) - w) / std::max(norm(w), 1e-300);
  });
  return e.empty() ? 0.0 : *std::max_element(e.begin(), e.end());
}

double loglog_slope(const BiField& Z, Point c, const std::vector<Point>& dirs,
                    const std::vector<double>& radii) {
  double total = 0.0;
  for (Point d : dirs) {
    const double len = std::hypot(d.x, d.y);
    double mx = 0, my = 0, sxy = 0, sxx = 0;
    std::vector<double> lx, ly;
    for (double r : radii) {
      lx.push_back(std::log(r));
      ly.push_back(std::log(norm(Z(c + (r / len) * d))));
      mx += lx.back();
      my += ly.back();
    }
    mx /= static_cast<double>(lx.size());
    my /= static_cast<double>(ly.size());
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxy += (lx[i] - mx) * (ly[i] - my);
      sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    total += sxy / sxx;
  }
  return total / static_cast<double>(dirs.size());
}

double cauchy_riemann_residual(const BiField& W, Point p) {
  const Jet j = W.jet(p, 1);
  const Binumber wx = j.partial(1, 0), wy = j.partial(0, 1);
  return std::fabs(wx.re - wy.im) + std::fabs(wy.re - sigma(W.sig()) * wx.im);
}

namespace {

constexpr Signature E = Signature::Elliptic;
constexpr Signature H = Signature::Hyperbolic;
const Point z0{1, 2};
const Point kernel_center{1, 5};
const Point kernel_base{1e-6, 1e-6};
const Box quadrant_box{0.5, 3, 0.5, 3};
const Box square{-1, 1, -1, 1};

struct Perturb {
  bool on = false;
  BiField operator()(const BiField& W) const {
    if (!on) return W;
    const BiField x = coordinate_x(W.sig(), W.domain());
    return W + (x * x + 1.0) * 1e-3;
  }
  double operator()(double v) const { return on ? v + 1e-3 : v; }
};

using Measure = std::function<double(const VerifyOptions&, const Perturb&)>;
using Tolerance = std::function<double(const VerifyOptions&)>;

struct Invariant {
  std::string name;
  std::string context;
  Tolerance tol;
  Measure measure;
};

Tolerance fixed(double t) {
  return [t](const VerifyOptions&) { return t; };
}

double closed_form_tol(const VerifyOptions& o) { return o.tol; }

BiField fd_copy(const BiField& W, double h) {
  return BiField::finite_difference(W.sig(), W.domain(), [W](Point p) { return W(p); }, h);
}

RecursionCfg recursion(const VerifyOptions& o) { return {PathPolicy{}, o.quad}; }

TransplantConfig transplant_cfg(const VerifyOptions& o) {
  TransplantConfig c;
  c.quad = o.quad;
  return c;
}

GeneratingSequence f_sequence() { return GeneratingSequence::constant(contexts::main_pair(contexts::f_y2())); }

std::vector<Binumber> coefficients(Signature s) { return {Binumber::real(1.0, s), Binumber::unit(s)}; }

template <class Fn>
double worst(const std::vector<Point>& pts, Fn fn) {
  double w = 0.0;
  for (Point p : pts) w = std::max(w, fn(p));
  return w;
}

FormalPower g_power(const VerifyOptions& o, int n, const Binumber& a) {
  return transplant_formal_power(contexts::f_y2(), contexts::g_1xy3(),
                                 formal_power(f_sequence(), n, a, z0, 0, recursion(o)), transplant_cfg(o));
}

FormalPower xy_kernel(const VerifyOptions& o, const Binumber& a) {
  TransplantConfig c = transplant_cfg(o);
  c.base_point = kernel_base;
  return cauchy_kernel(contexts::g_xy(), a, kernel_center, c);
}

std::vector<Point> kernel_points() {
  std::vector<Point> out;
  for (Point p : random_points(40, {0.1, 4, 0.1, 8}, 21))
    if (distance(p, kernel_center) >= 0.05) out.push_back(p);
  return out;
}

BiField hyperbolic_square() {
  return BiField::analytic(H, Domain::plane(), [](const auto& x, const auto& t) {
    const auto z = x + t * Binumber::unit(H);
    return z * z;
  });
}

BiField hyperbolic_transplant(const VerifyOptions& o) {
  TransplantConfig c = transplant_cfg(o);
  c.base_point = Point{0.3, -0.2};
  c.constant = ConstantPolicy::pin_at(*c.base_point, 0.0);
  return transplant(contexts::hyperbolic_unit(), contexts::hyperbolic_quadric(), hyperbolic_square(), c);
}

std::vector<Invariant> invariants() {
  std::vector<Invariant> v;
  const auto pts = random_points(10, quadrant_box, 5);
  const auto sq = random_points(10, square, 6);

  v.push_back({"algebra.ring_identities", "unit", fixed(1e-13), [](const VerifyOptions&, const Perturb& P) {
                 std::mt19937 rng(1);
                 std::uniform_real_distribution<double> u(-2, 2);
                 double w = 0.0;
                 for (int k = 0; k < 200; ++k)
                   for (Signature s : {E, H}) {
                     const Binumber a(u(rng), u(rng), s), b(u(rng), u(rng), s), c(u(rng), u(rng), s);
                     const double scale = 1.0 + norm(a) * norm(b) * norm(c);
                     w = std::max({w, norm(a * b * c - a * (b * c)) / scale,
                                   norm(a * (b + c) - a * b - a * c) / scale, norm(a * b - b * a) / scale});
                   }
                 return P(w);
               }});
  v.push_back({"algebra.inverse", "unit", fixed(1e-12), [](const VerifyOptions&, const Perturb& P) {
                 std::mt19937 rng(2);
                 std::uniform_real_distribution<double> u(-2, 2);
                 double w = 0.0;
                 for (int k = 0; k < 200; ++k)
                   for (Signature s : {E, H}) {
                     const Binumber a(u(rng), u(rng), s);
                     if (std::fabs(modulus_sq(a)) < 0.1) continue;
                     w = std::max(w, norm(a * inverse(a) - Binumber::real(1.0, s)));
                   }
                 return P(w);
               }});
  v.push_back({"algebra.null_cone_rejected", "hyperbolic_unit", fixed(0.0),
               [](const VerifyOptions&, const Perturb& P) {
                 double m = 1.0;
                 try {
                   (void)inverse(Binumber(1, 1, H));
                 } catch (const Error& e) {
                   if (e.kind() == ErrorKind::NotInvertible) m = 0.0;
                 }
                 return P(m);
               }});
  v.push_back({"fields.holomorphic_dzbar", "unit", fixed(1e-12), [sq](const VerifyOptions&, const Perturb& P) {
                 double w = 0.0;
                 for (Signature s : {E, H}) {
                   const BiField z3 = P(BiField::analytic(s, Domain::plane(), [s](const auto& x, const auto& y) {
                     const auto z = x + y * Binumber::unit(s);
                     return z * z * z;
                   }));
                   w = std::max(w, worst(sq, [&](Point p) { return norm(wirtinger(z3, Wirtinger::dzbar, p)); }));
                 }
                 return w;
               }});
  v.push_back({"fields.potential_f_y2", "f_y2", fixed(1e-10), [pts](const VerifyOptions&, const Perturb& P) {
                 const BiField q = P(contexts::f_y2().q);
                 return worst(pts, [&](Point p) { return std::fabs(q(p).re - 2.0 / (p.y * p.y)); });
               }});
  v.push_back({"fields.potential_g_1xy3", "g_1xy3", fixed(1e-10), [pts](const VerifyOptions&, const Perturb& P) {
                 const BiField q = P(contexts::g_1xy3().q), qf = contexts::f_y2().q;
                 return worst(pts, [&](Point p) { return std::fabs(q(p).re - qf(p).re); });
               }});
  v.push_back({"fields.potential_g_xy", "g_xy", fixed(1e-10), [pts](const VerifyOptions&, const Perturb& P) {
                 const BiField q = P(contexts::g_xy().q);
                 return worst(pts, [&](Point p) { return std::fabs(q(p).re); });
               }});
  v.push_back({"fields.finite_difference_laplacian", "f_y2", fixed(1e-5),
               [pts](const VerifyOptions& o, const Perturb& P) {
                 const BiField f = fd_copy(P(contexts::f_y2().f), o.h);
                 return worst(pts, [&](Point p) { return std::fabs(second_order(f, SecondOrder::laplacian, p) - 2.0); });
               }});

  v.push_back({"antigradient.path_independence", "f_y2", fixed(1e-10),
               [pts](const VerifyOptions& o, const Perturb& P) {
                 const Domain dom = Domain::quadrant();
                 const BiField u = BiField::analytic(E, dom, [](const auto& x, const auto& y) {
                   return x * x * x * y - exp(y) * cos(x);
                 });
                 const BiField Phi = P(dzbar(u));
                 return worst(pts, [&](Point p) {
                   const double a = abar(Phi, z0, p, make_path(z0, p, dom, PathPolicy{}, o.quad));
                   const double b = abar(Phi, z0, p, make_path(z0, p, dom, PathPolicy::horizontal_first(), o.quad));
                   return std::fabs(a - b) / std::max(1.0, std::fabs(a));
                 });
               }});
  v.push_back({"antigradient.reconstruction", "f_y2", fixed(1e-10),
               [pts](const VerifyOptions& o, const Perturb& P) {
                 const BiField u = BiField::analytic(E, Domain::quadrant(), [](const auto& x, const auto& y) {
                   return x * x * x * y - exp(y) * cos(x);
                 });
                 const BiField Phi = dzbar(u);
                 const BiField A = P(antigradient_field(Phi, z0, PathPolicy{}, o.quad));
                 return worst(pts, [&](Point p) {
                   return norm(wirtinger(A, Wirtinger::dzbar, p) - Phi(p)) / std::max(1.0, norm(Phi(p)));
                 });
               }});

  v.push_back({"vekua.powers_residual", "f_y2", fixed(1e-8), [pts](const VerifyOptions& o, const Perturb& P) {
                 const MainVekua eq = make_vekua(contexts::f_y2());
                 double w = 0.0;
                 for (int n = 0; n <= 2; ++n)
                   for (const Binumber& a : coefficients(E)) {
                     const BiField Z = P(formal_power(f_sequence(), n, a, z0, 0, recursion(o)).value);
                     w = std::max(w, worst(pts, [&](Point p) {
                                    return vekua_residual(eq, Z, p) / std::max(1.0, norm(Z(p)));
                                  }));
                   }
                 return w;
               }});
  v.push_back({"vekua.powers_closed_form", "f_y2", closed_form_tol, [pts](const VerifyOptions& o, const Perturb& P) {
                 double w = 0.0;
                 for (int n = 0; n <= 2; ++n)
                   for (const Binumber& a : coefficients(E))
                     w = std::max(w, max_rel_err(P(formal_power(f_sequence(), n, a, z0, 0, recursion(o)).value),
                                                 oracles::zf(n, a, z0), pts));
                 return w;
               }});
  v.push_back({"vekua.differential_relation", "f_y2", fixed(1e-8), [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto seq = f_sequence();
                 double w = 0.0;
                 for (const Binumber& a : coefficients(E)) {
                   const BiField d = P(fg_derivative(seq.pair(0), formal_power(seq, 2, a, z0, 0, recursion(o)).value));
                   const BiField Z1 = formal_power(seq, 1, a, z0, 1, recursion(o)).value;
                   w = std::max(w, worst(pts, [&](Point p) { return norm(d(p) - Z1(p) * 2.0) / std::max(1.0, norm(Z1(p))); }));
                 }
                 return w;
               }});
  v.push_back({"vekua.schrodinger_real_part", "f_y2", fixed(1e-5), [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto f = contexts::f_y2();
                 const BiField W = formal_power(f_sequence(), 2, Binumber(1, 1, E), z0, 0, recursion(o)).value;
                 const BiField u = fd_copy(P(real_part(W)), o.h);
                 return worst(pts, [&](Point p) { return schrodinger_residual(f.q, u, p); });
               }});
  v.push_back({"vekua.schrodinger_imag_part", "f_y2", fixed(1e-5), [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto f = contexts::f_y2();
                 const BiField W = formal_power(f_sequence(), 2, Binumber(1, 1, E), z0, 0, recursion(o)).value;
                 const BiField u = fd_copy(P(imag_part(W)), o.h);
                 return worst(pts, [&](Point p) { return schrodinger_residual(f.q1, u, p); });
               }});
  v.push_back({"vekua.conjugate_round_trip", "f_y2", fixed(1e-7), [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto f = contexts::f_y2();
                 const BiField W1 = real_part(formal_power(f_sequence(), 2, Binumber(1, 1, E), z0, 0, recursion(o)).value);
                 ConjugateCfg cc{PathPolicy{}, o.quad, ConstantPolicy::zero()};
                 const BiField W2 = conjugate_imag(f, W1, z0, cc);
                 cc.constant = ConstantPolicy::pin_at(z0, W1(z0).re);
                 const BiField R = P(conjugate_real(f, W2, z0, cc));
                 return worst(pts, [&](Point p) { return std::fabs(R(p).re - W1(p).re); });
               }});
  v.push_back({"vekua.factorization", "f_y2", fixed(1e-7), [pts](const VerifyOptions&, const Perturb& P) {
                 auto f = contexts::f_y2();
                 f.q = P(f.q);
                 std::mt19937 rng(8);
                 double w = 0.0;
                 for (int k = 0; k < 10; ++k) {
                   const BiField phi = random_poly(E, rng, 4, f.domain);
                   w = std::max(w, worst(pts, [&](Point p) { return factorization_residual(f, phi, p); }));
                 }
                 return w;
               }});
  v.push_back({"vekua.relation_VB_Pi", "f_y2", fixed(1e-7), [pts](const VerifyOptions&, const Perturb& P) {
                 const auto f = contexts::f_y2();
                 std::mt19937 rng(17);
                 double w = 0.0;
                 for (int k = 0; k < 10; ++k) {
                   const BiField om = random_poly(E, rng, 3) + Binumber::unit(E) * random_poly(E, rng, 3);
                   w = std::max(w, worst(pts, [&](Point p) { return relation_check(f.f, om, p); }));
                 }
                 return P(w);
               }});
  v.push_back({"vekua.p_analytic", "f_y2", fixed(1e-8), [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto f = contexts::f_y2();
                 const PAnalyticSystem sys = make_p_analytic(f);
                 const BiField W = formal_power(f_sequence(), 1, Binumber::real(1.0, E), z0, 0, recursion(o)).value;
                 const BiField om = P(apply_B(W, f.f, BDirection::inverse));
                 return worst(pts, [&](Point p) { return p_analytic_residual(sys, om, p); });
               }});

  v.push_back({"bers.char_coeffs", "f_y2", fixed(1e-12), [pts](const VerifyOptions&, const Perturb& P) {
                 const auto f = contexts::f_y2();
                 const MainVekua eq = make_vekua(f);
                 const GeneratingPair pair = contexts::main_pair(f);
                 return P(worst(pts, [&](Point p) {
                   const CharCoeffs c = char_coeffs(pair, p);
                   return norm(c.a) + norm(c.b - eq.coeff(p));
                 }));
               }});
  v.push_back({"bers.adjoint_involution", "g_1xy3", fixed(1e-10), [pts](const VerifyOptions&, const Perturb& P) {
                 const GeneratingPair pair = contexts::main_pair(contexts::g_1xy3());
                 const GeneratingPair back = adjoint(adjoint(pair));
                 return std::max(max_rel_err(P(back.F), pair.F, pts), max_rel_err(back.G, pair.G, pts));
               }});

  v.push_back({"transplant.closed_form", "g_1xy3", closed_form_tol, [pts](const VerifyOptions& o, const Perturb& P) {
                 double w = 0.0;
                 for (int n = 1; n <= 2; ++n)
                   for (const Binumber& a : coefficients(E))
                     w = std::max(w, max_rel_err(P(g_power(o, n, a).value), oracles::zg(n, a, z0), pts));
                 return w;
               }});
  v.push_back({"transplant.vekua_residual", "g_1xy3", fixed(1e-8), [pts](const VerifyOptions& o, const Perturb& P) {
                 const MainVekua eq = make_vekua(contexts::g_1xy3());
                 double w = 0.0;
                 for (int n = 1; n <= 2; ++n) {
                   const BiField Z = P(g_power(o, n, Binumber(0.6, -0.8, E)).value);
                   w = std::max(w, worst(pts, [&](Point p) { return vekua_residual(eq, Z, p) / std::max(1.0, norm(Z(p))); }));
                 }
                 return w;
               }});
  v.push_back({"transplant.real_part_invariance", "g_1xy3", fixed(1e-15),
               [pts](const VerifyOptions& o, const Perturb& P) {
                 const Binumber a(0.6, -0.8, E);
                 const BiField Zf = formal_power(f_sequence(), 2, a, z0, 0, recursion(o)).value;
                 const BiField Zg = P(g_power(o, 2, a).value);
                 return worst(pts, [&](Point p) { return std::fabs(Zg(p).re - Zf(p).re); });
               }});
  v.push_back({"transplant.imag_part_q2", "g_1xy3", fixed(1e-5), [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto g = contexts::g_1xy3();
                 const BiField v2 = fd_copy(P(imag_part(g_power(o, 2, Binumber(0.6, -0.8, E)).value)), o.h);
                 return worst(pts, [&](Point p) { return schrodinger_residual(g.q1, v2, p); });
               }});
  v.push_back({"transplant.round_trip", "g_1xy3", fixed(1e-7), [pts](const VerifyOptions& o, const Perturb& P) {
                 const Binumber a(0.6, -0.8, E);
                 const FormalPower Zf = formal_power(f_sequence(), 2, a, z0, 0, recursion(o));
                 const FormalPower Zg = transplant_formal_power(contexts::f_y2(), contexts::g_1xy3(), Zf, transplant_cfg(o));
                 const FormalPower back = transplant_formal_power(contexts::g_1xy3(), contexts::f_y2(), Zg, transplant_cfg(o));
                 return max_rel_err(P(back.value), Zf.value, pts);
               }});
  v.push_back({"transplant.order_slope", "g_1xy3", fixed(0.1), [](const VerifyOptions& o, const Perturb& P) {
                 const std::vector<Point> axes{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
                 double w = 0.0;
                 for (int n = 1; n <= 2; ++n)
                   for (const Binumber& a : coefficients(E))
                     w = std::max(w, std::fabs(loglog_slope(P(g_power(o, n, a).value), z0, axes) - n));
                 return w;
               }});

  v.push_back({"sequence.successor_closed_form", "g_1xy3", closed_form_tol,
               [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto pairs = successor_sequence(contexts::g_1xy3(), 2, z0, contexts::f_y2(), recursion(o),
                                                       transplant_cfg(o));
                 return std::max({max_rel_err(P(pairs[1].F), oracles::F1(z0), pts),
                                  max_rel_err(pairs[1].G, oracles::G1(z0), pts),
                                  max_rel_err(pairs[2].F, oracles::F2(z0), pts),
                                  max_rel_err(pairs[2].G, oracles::G2(z0), pts)});
               }});
  v.push_back({"sequence.successor_coefficients", "g_1xy3", fixed(1e-8),
               [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto pairs = successor_sequence(contexts::g_1xy3(), 2, z0, contexts::f_y2(), recursion(o),
                                                       transplant_cfg(o));
                 double w = 0.0;
                 for (int m = 0; m < 2; ++m) {
                   const BiField a1 = P(pairs[m + 1].a);
                   w = std::max(w, worst(pts, [&](Point p) {
                                  return norm(a1(p) - pairs[m].a(p)) + norm(pairs[m + 1].b(p) + pairs[m].B(p));
                                }));
                 }
                 return w;
               }});
  v.push_back({"sequence.im_F1G1", "g_1xy3", fixed(1e-8), [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto pairs = successor_sequence(contexts::g_1xy3(), 1, z0, contexts::f_y2(), recursion(o),
                                                       transplant_cfg(o));
                 const BiField F1 = P(pairs[1].F);
                 return worst(pts, [&](Point p) {
                   return std::fabs((conj(F1(p)) * pairs[1].G(p)).im - oracles::im_F1G1(p, z0));
                 });
               }});
  v.push_back({"sequence.period_one_f_y2", "f_y2", fixed(1e-8), [pts](const VerifyOptions& o, const Perturb& P) {
                 const auto f = contexts::f_y2();
                 const auto pairs = successor_sequence(f, 2, z0, std::nullopt, recursion(o), transplant_cfg(o));
                 const double f0 = f.f(z0).re;
                 return std::max({max_rel_err(P(pairs[1].F), pairs[0].F / f0, pts),
                                  max_rel_err(pairs[1].G, pairs[0].G * f0, pts),
                                  max_rel_err(pairs[2].F, pairs[1].F, pts), max_rel_err(pairs[2].G, pairs[1].G, pts)});
               }});

  v.push_back({"kernel.closed_form", "g_xy", closed_form_tol, [](const VerifyOptions& o, const Perturb& P) {
                 const FormalPower K = xy_kernel(o, Binumber::real(1.0, E));
                 const BiField k = P(K.value);
                 return worst(kernel_points(), [&](Point p) {
                   const Path path = make_path(kernel_base, p, K.value.domain(), PathPolicy{}, o.quad);
                   const Binumber want = oracles::kernel_corrected(p, kernel_center, path.vertices);
                   return norm(k(p) - want) / norm(want);
                 });
               }});
  v.push_back({"kernel.vekua_residual", "g_xy", fixed(1e-8), [](const VerifyOptions& o, const Perturb& P) {
                 const MainVekua eq = make_vekua(contexts::g_xy());
                 const BiField k = P(xy_kernel(o, Binumber(0.6, 0.8, E)).value);
                 return worst(kernel_points(), [&](Point p) { return vekua_residual(eq, k, p) / std::max(1.0, norm(k(p))); });
               }});
  v.push_back({"kernel.pole_limit", "g_xy", fixed(1e-3), [](const VerifyOptions& o, const Perturb& P) {
                 double w = 0.0;
                 for (const Binumber& a : coefficients(E)) {
                   const BiField k = P(xy_kernel(o, a).value);
                   for (Point d : {Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}}) {
                     const Point q = kernel_center + 1e-5 * d;
                     w = std::max(w, norm(k(q) * Binumber(1e-5 * d.x, 1e-5 * d.y, E) - a));
                   }
                 }
                 return w;
               }});
  v.push_back({"kernel.order_slope", "g_xy", fixed(0.1), [](const VerifyOptions& o, const Perturb& P) {
                 const std::vector<Point> diag{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
                 return std::fabs(loglog_slope(P(xy_kernel(o, Binumber::real(1.0, E)).value), kernel_center, diag) + 1.0);
               }});
  v.push_back({"kernel.unit_pole", "unit", fixed(1e-12), [sq](const VerifyOptions& o, const Perturb& P) {
                 const Binumber a(2, 1, E);
                 const Point c{0.5, 0.5}, base{-3, -4};
                 TransplantConfig cfg = transplant_cfg(o);
                 cfg.base_point = base;
                 cfg.constant = ConstantPolicy::pin_at(base, (a / Binumber(base.x - c.x, base.y - c.y, E)).im);
                 const BiField k = P(cauchy_kernel(contexts::unit(), a, c, cfg).value);
                 const BiField pole = simple_pole(E, a, c, Domain::plane()).value;
                 return max_rel_err(k, pole, sq);
               }});

  v.push_back({"ladder.unit_exact", "unit", fixed(1e-12), [sq](const VerifyOptions&, const Perturb& P) {
                 const auto seq = GeneratingSequence::constant(contexts::main_pair(contexts::unit()));
                 const Point c{0.2, -0.1};
                 const Binumber a(0.5, -1.5, E);
                 double w = 0.0;
                 for (const auto& Z : negative_power_ladder(seq, simple_pole(E, a, c, Domain::plane()), 4))
                   w = std::max(w, max_rel_err(P(Z.value), analytic_power(E, Z.order, a, c, Domain::plane()).value, sq));
                 return w;
               }});
  v.push_back({"grid.parallel_matches_serial", "unit", fixed(0.0), [](const VerifyOptions&, const Perturb& P) {
                 const auto pts = GridSpec{40, 40, square}.points();
                 const BiField Z = analytic_power(E, 3, Binumber(1, 0, E), {0, 0}, Domain::plane()).value;
                 const BiField Zp = P(Z);
                 const auto s = evaluate_grid_serial(pts, [&](Point p) -> std::optional<Binumber> { return Z(p); });
                 const auto q = evaluate_grid_parallel(pts, [&](Point p) -> std::optional<Binumber> { return Zp(p); });
                 double w = 0.0;
                 for (std::size_t i = 0; i < s.size(); ++i) w = std::max(w, norm(*s[i] - *q[i]));
                 return w;
               }});

  v.push_back({"hyperbolic.conjugate_xt", "hyperbolic_unit", fixed(1e-10),
               [sq](const VerifyOptions& o, const Perturb& P) {
                 const BiField u = BiField::analytic(H, Domain::plane(), [](const auto& x, const auto& t) { return x * t; });
                 const BiField W2 = P(conjugate_imag(contexts::hyperbolic_unit(), u, {0, 0}, {PathPolicy{}, o.quad, ConstantPolicy::zero()}));
                 double lo = std::numeric_limits<double>::infinity(), hi = -lo;
                 for (Point p : sq) {
                   const double d = W2(p).re - 0.5 * (p.x * p.x + p.y * p.y);
                   lo = std::min(lo, d);
                   hi = std::max(hi, d);
                 }
                 return hi - lo;
               }});
  v.push_back({"hyperbolic.cauchy_riemann", "hyperbolic_unit", fixed(1e-10),
               [sq](const VerifyOptions& o, const Perturb& P) {
                 const BiField u = BiField::analytic(H, Domain::plane(), [](const auto& x, const auto& t) { return x * t; });
                 const BiField W2 = conjugate_imag(contexts::hyperbolic_unit(), u, {0, 0}, {PathPolicy{}, o.quad, ConstantPolicy::zero()});
                 const BiField W = P(u + Binumber::unit(H) * W2);
                 return worst(sq, [&](Point p) { return cauchy_riemann_residual(W, p); });
               }});
  v.push_back({"hyperbolic.transplant_round_trip", "hyperbolic_unit", fixed(1e-7),
               [sq](const VerifyOptions& o, const Perturb& P) {
                 const BiField W = hyperbolic_square();
                 const Point base{0.3, -0.2};
                 TransplantConfig c = transplant_cfg(o);
                 c.base_point = base;
                 c.constant = ConstantPolicy::pin_at(base, W(base).im);
                 const BiField back = transplant(contexts::hyperbolic_quadric(), contexts::hyperbolic_unit(),
                                                 hyperbolic_transplant(o), c);
                 return max_rel_err(P(back), W, sq);
               }});
  v.push_back({"hyperbolic.transplant_vekua_residual", "hyperbolic_unit", fixed(1e-8),
               [sq](const VerifyOptions& o, const Perturb& P) {
                 const MainVekua eq = make_vekua(contexts::hyperbolic_quadric());
                 const BiField w = P(hyperbolic_transplant(o));
                 return worst(sq, [&](Point p) { return vekua_residual(eq, w, p); });
               }});
  v.push_back({"hyperbolic.klein_gordon_factorization", "hyperbolic_unit", fixed(1e-5),
               [sq](const VerifyOptions& o, const Perturb& P) {
                 auto h = contexts::hyperbolic_quadric();
                 h.q = P(h.q);
                 std::mt19937 rng(9);
                 double w = 0.0;
                 for (int k = 0; k < 10; ++k) {
                   const BiField phi = fd_copy(random_poly(H, rng, 4), o.h);
                   w = std::max(w, worst(sq, [&](Point p) { return factorization_residual(h, phi, p); }));
                 }
                 return w;
               }});
  v.push_back({"hyperbolic.wave_real_part", "hyperbolic_unit", fixed(1e-5),
               [sq](const VerifyOptions& o, const Perturb& P) {
                 const auto g = contexts::hyperbolic_quadric();
                 const BiField u = fd_copy(P(real_part(hyperbolic_transplant(o))), o.h);
                 return worst(sq, [&](Point p) { return schrodinger_residual(g.q, u, p); });
               }});
  v.push_back({"hyperbolic.imag_part_q1", "hyperbolic_unit", fixed(1e-5),
               [sq](const VerifyOptions& o, const Perturb& P) {
                 const auto g = contexts::hyperbolic_quadric();
                 const BiField u = fd_copy(P(imag_part(hyperbolic_transplant(o))), o.h);
                 return worst(sq, [&](Point p) { return schrodinger_residual(g.q1, u, p); });
               }});
  return v;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& i : invariants()) out.push_back(i.name);
  return out;
}

std::vector<Check> run_verify(const VerifyOptions& opts) {
  std::vector<Check> out;
  for (const auto& inv : invariants()) {
    if (opts.context != "all" && opts.context != inv.context) continue;
    Check c{inv.name, inv.context, 0.0, inv.tol(opts), false, ""};
    const Perturb P{std::find(opts.perturb.begin(), opts.perturb.end(), inv.name) != opts.perturb.end()};
    try {
      c.measured = inv.measure(opts, P);
      c.pass = std::isfinite(c.measured) && c.measured <= c.tol;
    } catch (const std::exception& e) {
      c.measured = std::numeric_limits<double>::quiet_NaN();
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pseudoanalytic::cli
