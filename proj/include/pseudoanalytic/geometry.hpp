#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace pseudoanalytic {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double distance(Point a, Point b);

struct Box {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
};

/// Planar domain: membership predicate, bounding box and punctures.
/// Simple connectivity (minus punctures) is the caller's responsibility.
class Domain {
 public:
  using Predicate = std::function<bool(Point)>;

  Domain();
  Domain(std::string description, Predicate inside, Box bbox, std::vector<Point> punctures = {});

  static Domain plane(Box bbox = {-10.0, 10.0, -10.0, 10.0});
  static Domain quadrant(Box bbox = {0.0, 10.0, 0.0, 10.0});
  static Domain rectangle(Box bbox);

  bool contains(Point p) const;
  /// Distance to the nearest puncture; +inf when there is none.
  double distance_to_puncture(Point p) const;
  /// contains(p) and p is not within `clearance` of a puncture.
  bool admits(Point p, double clearance = 0.0) const;

  Domain with_puncture(Point p) const;
  Domain intersect(const Domain& other) const;

  /// n x n interior sample points of the bounding box that lie in the domain
  /// and keep a margin from the punctures.
  std::vector<Point> sample_grid(int n, double puncture_margin = 1e-3) const;

  const Box& bounding_box() const { return bbox_; }
  const std::vector<Point>& punctures() const { return punctures_; }
  const std::string& description() const { return description_; }
  /// Diameter of the bounding box.
  double scale() const;

 private:
  std::string description_;
  std::shared_ptr<const Predicate> inside_;
  Box bbox_;
  std::vector<Point> punctures_;
};

}  // namespace pseudoanalytic
