#include "pseudoanalytic/grid.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

#include "pseudoanalytic/error.hpp"

namespace pseudoanalytic {

std::vector<Point> GridSpec::points() const {
  require(nx >= 2 && ny >= 2, "grid must be at least 2 x 2");
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int j = 0; j < ny; ++j) {
    const double y = box.ymin + (box.ymax - box.ymin) * j / (ny - 1);
    for (int i = 0; i < nx; ++i) out.push_back({box.xmin + (box.xmax - box.xmin) * i / (nx - 1), y});
  }
  return out;
}

std::vector<std::optional<Binumber>> evaluate_grid_serial(const std::vector<Point>& points,
                                                          const CellFn& fn) {
  std::vector<std::optional<Binumber>> out;
  out.reserve(points.size());
  for (const Point& p : points) out.push_back(fn(p));
  return out;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::exception_ptr first;
  std::mutex mu;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < count; ++i) {
    {
      std::lock_guard<std::mutex> lock(mu);
      if (first) continue;
    }
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

std::vector<std::optional<Binumber>> evaluate_grid_parallel(const std::vector<Point>& points,
                                                            const CellFn& fn) {
  std::vector<std::optional<Binumber>> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) { out[i] = fn(points[i]); });
  return out;
}

int worker_threads() { return omp_get_max_threads(); }

}  // namespace pseudoanalytic
