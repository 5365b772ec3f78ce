#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <stdexcept>

#include "pseudoanalytic/grid.hpp"
#include "support.hpp"

using namespace pseudoanalytic;
using namespace pa_test;

TEST_CASE("grid points are row-major") {
  const GridSpec g{3, 2, Box{0, 2, 10, 11}};
  const auto pts = g.points();
  REQUIRE(pts.size() == 6);
  CHECK(pts[0] == Point{0, 10});
  CHECK(pts[1] == Point{1, 10});
  CHECK(pts[3] == Point{0, 11});
  CHECK(pts[5] == Point{2, 11});
}

TEST_CASE("parallel evaluation equals the serial reference") {
  const auto pts = GridSpec{57, 43, Box{-1, 1, -1, 1}}.points();
  const CellFn fn = [](Point p) -> std::optional<Binumber> {
    if (std::hypot(p.x, p.y) < 0.2) return std::nullopt;
    return inverse(Binumber(p.x, p.y, E)) * std::exp(p.x);
  };
  const auto s = evaluate_grid_serial(pts, fn), q = evaluate_grid_parallel(pts, fn);
  REQUIRE(s.size() == q.size());
  int holes = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    REQUIRE(s[i].has_value() == q[i].has_value());
    if (!s[i]) {
      ++holes;
      continue;
    }
    CHECK(s[i]->re == q[i]->re);
    CHECK(s[i]->im == q[i]->im);
  }
  CHECK(holes > 0);
  CHECK(worker_threads() >= 1);
}

TEST_CASE("exceptions propagate out of the parallel loop") {
  std::atomic<int> ran{0};
  CHECK_THROWS_AS(parallel_for(1000,
                               [&](std::size_t i) {
                                 ++ran;
                                 if (i == 500) throw std::runtime_error("cell");
                               }),
                  std::runtime_error);
  const auto pts = GridSpec{10, 10, Box{0, 1, 0, 1}}.points();
  CHECK_THROWS_AS(evaluate_grid_parallel(pts,
                                         [](Point p) -> std::optional<Binumber> {
                                           if (p.x > 0.5 && p.y > 0.5) fail(ErrorKind::Domain, "cell");
                                           return Binumber(p.x, p.y, E);
                                         }),
                  Error);
}
