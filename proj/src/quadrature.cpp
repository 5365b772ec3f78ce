#include "pseudoanalytic/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include "pseudoanalytic/error.hpp"

namespace pseudoanalytic {

QuadratureCfg QuadratureCfg::gauss_legendre(int order) {
  QuadratureCfg c;
  c.rule = QuadRule::GaussLegendre;
  c.order = order;
  return c;
}

QuadratureCfg QuadratureCfg::composite_trapezoid(int panels) {
  QuadratureCfg c;
  c.rule = QuadRule::Trapezoid;
  c.panels = panels;
  return c;
}

void QuadratureCfg::validate() const {
  if (rule == QuadRule::GaussLegendre && (order < 2 || order > 64))
    throw ContractViolation("quadrature order must lie in [2, 64]");
  if (rule == QuadRule::Trapezoid && panels < 1)
    throw ContractViolation("trapezoid rule needs at least one panel");
  if (!(rel_tol > 0.0)) throw ContractViolation("rel_tol must be positive");
  if (max_subdiv < 0) throw ContractViolation("max_subdiv must be non-negative");
}

bool operator==(const QuadratureCfg& a, const QuadratureCfg& b) {
  return std::tie(a.rule, a.order, a.panels, a.rel_tol, a.max_subdiv) ==
         std::tie(b.rule, b.order, b.panels, b.rel_tol, b.max_subdiv);
}

namespace {

// P_0..P_n at t.
std::vector<double> legendre_all(int n, double t) {
  std::vector<double> p(n + 1);
  p[0] = 1.0;
  if (n >= 1) p[1] = t;
  for (int k = 1; k < n; ++k) p[k + 1] = ((2.0 * k + 1.0) * t * p[k] - k * p[k - 1]) / (k + 1.0);
  return p;
}

PanelRule make_gauss(int n) {
  PanelRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto p = legendre_all(n, t);
      const double dp = n * (t * p[n] - p[n - 1]) / (t * t - 1.0);
      const double dt = p[n] / dp;
      t -= dt;
      if (std::fabs(dt) < 1e-16) break;
    }
    const auto p = legendre_all(n, t);
    const double dp = n * (t * p[n] - p[n - 1]) / (t * t - 1.0);
    r.nodes[i] = t;
    r.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  // l_j(s) = w_j sum_k (2k+1)/2 P_k(t_j) P_k(s), integrated from -1 to t_i.
  r.cumulative.assign(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<std::vector<double>> P(n);
  for (int i = 0; i < n; ++i) {
    P[i] = legendre_all(n, r.nodes[i]);
  }
  for (int i = 0; i < n; ++i) {
    const auto& pt = P[i];
    for (int j = 0; j < n; ++j) {
      double s = 0.5 * (r.nodes[i] + 1.0);
      for (int k = 1; k < n; ++k) s += 0.5 * P[j][k] * (pt[k + 1] - pt[k - 1]);
      r.cumulative[static_cast<std::size_t>(i) * n + j] = r.weights[j] * s;
    }
  }
  return r;
}

PanelRule make_trapezoid(int m) {
  PanelRule r;
  const int n = m + 1;
  const double h = 2.0 / m;
  r.nodes.resize(n);
  r.weights.assign(n, h);
  r.weights.front() = r.weights.back() = 0.5 * h;
  for (int i = 0; i < n; ++i) r.nodes[i] = -1.0 + h * i;
  r.cumulative.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 1; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      r.cumulative[static_cast<std::size_t>(i) * n + j] = (j == 0 || j == i) ? 0.5 * h : h;
  return r;
}

}  // namespace

const PanelRule& panel_rule(const QuadratureCfg& cfg) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<PanelRule>> cache;
  const int n = cfg.rule == QuadRule::GaussLegendre ? cfg.order : cfg.panels;
  const std::pair<int, int> key{static_cast<int>(cfg.rule), n};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    cfg.validate();
    auto rule = std::make_unique<PanelRule>(cfg.rule == QuadRule::GaussLegendre ? make_gauss(n)
                                                                                  : make_trapezoid(n));
    it = cache.emplace(key, std::move(rule)).first;
  }
  return *it->second;
}

PathPolicy PathPolicy::horizontal_first() {
  PathPolicy p;
  p.kind = PathKind::HorizontalFirst;
  return p;
}

PathPolicy PathPolicy::straight() {
  PathPolicy p;
  p.kind = PathKind::Straight;
  return p;
}

PathPolicy PathPolicy::polyline(std::vector<Point> waypoints) {
  PathPolicy p;
  p.kind = PathKind::Waypoints;
  p.waypoints = std::move(waypoints);
  return p;
}

bool operator==(const PathPolicy& a, const PathPolicy& b) {
  return a.kind == b.kind && a.waypoints == b.waypoints && a.clearance == b.clearance &&
         a.detour == b.detour;
}

double Path::length() const {
  double s = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) s += distance(vertices[i - 1], vertices[i]);
  return s;
}

double segment_distance(Point a, Point b, Point q) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((q.x - a.x) * dx + (q.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(a.x + t * dx - q.x, a.y + t * dy - q.y);
}

namespace {

std::string describe(Point p) {
  std::ostringstream os;
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

// Rectangular detour for an axis leg a -> b that passes near puncture q.
// Coordinates are expressed along (u) and across (v) the leg.
std::vector<Point> detour_leg(Point a, Point b, Point q, double width, bool horizontal) {
  auto to_uv = [&](Point p) { return horizontal ? Point{p.x, p.y} : Point{p.y, p.x}; };
  auto from_uv = [&](double u, double v) { return horizontal ? Point{u, v} : Point{v, u}; };
  const Point A = to_uv(a), B = to_uv(b), Q = to_uv(q);
  const double s = B.x > A.x ? 1.0 : -1.0;
  const double d = std::min(width, 0.5 * std::fabs(Q.x - A.x));
  // Horizontal legs go above the puncture; vertical legs go to its right.
  const double side = Q.y + d;
  std::vector<Point> out;
  out.push_back(from_uv(Q.x - s * d, A.y));
  out.push_back(from_uv(Q.x - s * d, side));
  if (std::fabs(B.x - Q.x) > d) {
    out.push_back(from_uv(Q.x + s * d, side));
    out.push_back(from_uv(Q.x + s * d, A.y));
  } else {
    out.push_back(from_uv(B.x, side));
  }
  out.push_back(b);
  return out;
}

}  // namespace

std::vector<Point> route(const PathPolicy& policy, Point from, Point to,
                         const std::vector<Point>& punctures) {
  std::vector<Point> base{from};
  switch (policy.kind) {
    case PathKind::VerticalFirst:
      if (from.x != to.x && from.y != to.y) base.push_back({from.x, to.y});
      break;
    case PathKind::HorizontalFirst:
      if (from.x != to.x && from.y != to.y) base.push_back({to.x, from.y});
      break;
    case PathKind::Straight:
      break;
    case PathKind::Waypoints:
      for (const auto& w : policy.waypoints) base.push_back(w);
      break;
  }
  base.push_back(to);

  std::vector<Point> out{from};
  for (std::size_t i = 1; i < base.size(); ++i) {
    const Point a = out.back(), b = base[i];
    if (a == b) continue;
    const bool horizontal = a.y == b.y;
    const bool vertical = a.x == b.x;
    const Point* hit = nullptr;
    for (const auto& q : punctures)
      if (segment_distance(a, b, q) < policy.clearance) hit = &q;
    if (hit && (horizontal || vertical) && distance(a, *hit) >= policy.clearance &&
        distance(b, *hit) >= policy.clearance) {
      const Point pa = horizontal ? a : Point{a.y, a.x};
      const Point pb = horizontal ? b : Point{b.y, b.x};
      const Point pq = horizontal ? *hit : Point{hit->y, hit->x};
      const bool inside = (pq.x - pa.x) * (pb.x - pq.x) > 0.0;
      if (inside) {
        for (const auto& v : detour_leg(a, b, *hit, policy.detour, horizontal)) out.push_back(v);
        continue;
      }
    }
    out.push_back(b);
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    for (const auto& q : punctures)
      if (segment_distance(out[i - 1], out[i], q) < policy.clearance)
        fail(ErrorKind::PathThroughPole,
             "integration path " + describe(from) + " -> " + describe(to) +
                 " passes within clearance of puncture " + describe(q));
  return out;
}

}  // namespace pseudoanalytic
