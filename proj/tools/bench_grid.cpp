// Serial reference against the OpenMP grid evaluation: Cauchy kernel of
// g = x y on an N x N grid.  Usage: bench_grid [N]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "pseudoanalytic/contexts.hpp"
#include "pseudoanalytic/grid.hpp"
#include "pseudoanalytic/transplant.hpp"

using namespace pseudoanalytic;

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 100;
  if (n < 2) {
    std::cerr << "usage: bench_grid [N >= 2]\n";
    return 2;
  }
  TransplantConfig cfg;
  cfg.base_point = Point{1e-6, 1e-6};
  const Point c{1, 5};
  const FormalPower K = cauchy_kernel(contexts::g_xy(), Binumber::real(1.0, Signature::Elliptic), c, cfg);
  const auto pts = GridSpec{n, n, Box{0.1, 4, 0.1, 8}}.points();
  const CellFn cell = [&](Point p) -> std::optional<Binumber> {
    if (distance(p, c) < 0.05) return std::nullopt;
    return K.value(p);
  };

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const auto serial = evaluate_grid_serial(pts, cell);
  const auto t1 = clock::now();
  const auto parallel = evaluate_grid_parallel(pts, cell);
  const auto t2 = clock::now();

  double diff = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (serial[i]) diff = std::max(diff, norm(*serial[i] - *parallel[i]));
  const double ts = std::chrono::duration<double>(t1 - t0).count();
  const double tp = std::chrono::duration<double>(t2 - t1).count();
  std::cout << "cells=" << pts.size() << " threads=" << worker_threads() << " serial=" << ts << "s parallel=" << tp
            << "s speedup=" << ts / tp << " max_diff=" << diff << '\n';
  return diff == 0.0 ? 0 : 1;
}
