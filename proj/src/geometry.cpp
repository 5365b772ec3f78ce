#include "pseudoanalytic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pseudoanalytic {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Domain::Domain() : Domain(plane()) {}

Domain::Domain(std::string description, Predicate inside, Box bbox, std::vector<Point> punctures)
    : description_(std::move(description)),
      inside_(std::make_shared<const Predicate>(std::move(inside))),
      bbox_(bbox),
      punctures_(std::move(punctures)) {}

Domain Domain::plane(Box bbox) {
  return Domain("plane", [](Point) { return true; }, bbox);
}

Domain Domain::quadrant(Box bbox) {
  return Domain("x>0, y>0", [](Point p) { return p.x > 0.0 && p.y > 0.0; }, bbox);
}

Domain Domain::rectangle(Box b) {
  return Domain("rectangle",
                [b](Point p) { return p.x > b.xmin && p.x < b.xmax && p.y > b.ymin && p.y < b.ymax; },
                b);
}

bool Domain::contains(Point p) const {
  return std::isfinite(p.x) && std::isfinite(p.y) && (*inside_)(p);
}

double Domain::distance_to_puncture(Point p) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& q : punctures_) d = std::min(d, distance(p, q));
  return d;
}

bool Domain::admits(Point p, double clearance) const {
  return contains(p) && distance_to_puncture(p) > clearance;
}

Domain Domain::with_puncture(Point p) const {
  Domain d = *this;
  d.punctures_.push_back(p);
  return d;
}

Domain Domain::intersect(const Domain& other) const {
  if (description_ == other.description_ && punctures_.empty() && other.punctures_.empty() &&
      bbox_.xmin == other.bbox_.xmin && bbox_.xmax == other.bbox_.xmax &&
      bbox_.ymin == other.bbox_.ymin && bbox_.ymax == other.bbox_.ymax)
    return *this;
  auto a = inside_;
  auto b = other.inside_;
  Box box{std::max(bbox_.xmin, other.bbox_.xmin), std::min(bbox_.xmax, other.bbox_.xmax),
          std::max(bbox_.ymin, other.bbox_.ymin), std::min(bbox_.ymax, other.bbox_.ymax)};
  std::vector<Point> punct = punctures_;
  for (const auto& q : other.punctures_)
    if (std::find(punct.begin(), punct.end(), q) == punct.end()) punct.push_back(q);
  std::string desc = description_ == other.description_ ? description_
                                                          : description_ + " & " + other.description_;
  return Domain(desc, [a, b](Point p) { return (*a)(p) && (*b)(p); }, box, std::move(punct));
}

std::vector<Point> Domain::sample_grid(int n, double puncture_margin) const {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const Point p{bbox_.xmin + (i + 0.5) * (bbox_.xmax - bbox_.xmin) / n,
                    bbox_.ymin + (j + 0.5) * (bbox_.ymax - bbox_.ymin) / n};
      if (admits(p, puncture_margin * scale())) pts.push_back(p);
    }
  return pts;
}

double Domain::scale() const {
  return std::hypot(bbox_.xmax - bbox_.xmin, bbox_.ymax - bbox_.ymin);
}

}  // namespace pseudoanalytic
