#pragma once

#include <vector>

#include "pseudoanalytic/geometry.hpp"

namespace pseudoanalytic {

enum class QuadRule { GaussLegendre, Trapezoid };

struct QuadratureCfg {
  QuadRule rule = QuadRule::GaussLegendre;
  int order = 8;    ///< nodes per panel (Gauss-Legendre)
  int panels = 16;  ///< sub-intervals per panel (trapezoid)
  double rel_tol = 1e-10;
  int max_subdiv = 20;

  static QuadratureCfg gauss_legendre(int order);
  static QuadratureCfg composite_trapezoid(int panels);
  void validate() const;
};

bool operator==(const QuadratureCfg& a, const QuadratureCfg& b);

/// Panel rule on [-1, 1]: nodes, weights and the cumulative integration
/// matrix S(i, j) = integral from -1 to t_i of the j-th nodal basis function.
struct PanelRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> cumulative;  ///< row-major n x n

  int size() const { return static_cast<int>(nodes.size()); }
  double S(int i, int j) const { return cumulative[static_cast<std::size_t>(i) * nodes.size() + j]; }
};

/// Cached, thread-safe access to the panel rule of a configuration.
const PanelRule& panel_rule(const QuadratureCfg& cfg);

enum class PathKind { VerticalFirst, HorizontalFirst, Straight, Waypoints };

/// How the integration path from a base point to an evaluation point is built.
///
/// Axis legs that pass within `clearance` of a puncture are rerouted around it
/// by a rectangular detour of half-width `detour`: above the puncture for
/// horizontal legs, to its right for vertical legs.
struct PathPolicy {
  PathKind kind = PathKind::VerticalFirst;
  std::vector<Point> waypoints;
  double clearance = 1e-6;
  double detour = 0.05;

  static PathPolicy axis_aligned() { return {}; }
  static PathPolicy horizontal_first();
  static PathPolicy straight();
  static PathPolicy polyline(std::vector<Point> waypoints);
};

bool operator==(const PathPolicy& a, const PathPolicy& b);

/// Explicit polyline with its quadrature configuration.
struct Path {
  std::vector<Point> vertices;
  QuadratureCfg quad;

  double length() const;
  Point start() const { return vertices.front(); }
  Point end() const { return vertices.back(); }
};

/// Builds the polyline from `from` to `to` for a policy; throws
/// PathThroughPole when a leg cannot keep the clearance from a puncture.
std::vector<Point> route(const PathPolicy& policy, Point from, Point to,
                         const std::vector<Point>& punctures);

/// Distance from q to the segment [a, b].
double segment_distance(Point a, Point b, Point q);

}  // namespace pseudoanalytic
