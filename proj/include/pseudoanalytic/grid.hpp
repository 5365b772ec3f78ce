#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pseudoanalytic/algebra.hpp"
#include "pseudoanalytic/geometry.hpp"

namespace pseudoanalytic {

/// nx x ny points of a box, row-major: y outer, x inner, both endpoints
/// included.
struct GridSpec {
  int nx = 2;
  int ny = 2;
  Box box;
  std::vector<Point> points() const;
};

/// Cell value, or nothing for excluded cells (puncture discs).
using CellFn = std::function<std::optional<Binumber>(Point)>;

/// Reference evaluation in point order.
std::vector<std::optional<Binumber>> evaluate_grid_serial(const std::vector<Point>& points,
                                                          const CellFn& fn);

/// Same result, points distributed over OpenMP threads.  The first exception
/// raised by any cell is rethrown after the loop.
std::vector<std::optional<Binumber>> evaluate_grid_parallel(const std::vector<Point>& points,
                                                            const CellFn& fn);

/// Runs body(i) for i < n over OpenMP threads; rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Number of worker threads the parallel routines will use.
int worker_threads();

}  // namespace pseudoanalytic
