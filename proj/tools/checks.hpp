#pragma once

#include <random>
#include <string>
#include <vector>

#include "pseudoanalytic/field.hpp"
#include "pseudoanalytic/quadrature.hpp"

namespace pseudoanalytic::cli {

/// Uniform random points in a box, fixed seed.
std::vector<Point> random_points(int n, Box box, unsigned seed);

/// Random real polynomial of total degree `degree`, coefficients in [-1, 1].
BiField random_poly(Signature sig, std::mt19937& rng, int degree, Domain domain = Domain::plane());

/// max |got - want| / |want| over the points, evaluated in parallel.
double max_rel_err(const BiField& got, const BiField& want, const std::vector<Point>& pts);

/// Least-squares slope of log|Z(c + r d)| against log r, averaged over the
/// unit directions d.
double loglog_slope(const BiField& Z, Point c, const std::vector<Point>& dirs,
                    const std::vector<double>& radii = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4});

/// Defect of the (hyperbolic) Cauchy-Riemann system for W = u + e v at p:
/// |u_x - v_y| + |u_y - sigma v_x|.
double cauchy_riemann_residual(const BiField& W, Point p);

struct Check {
  std::string name;
  std::string context;
  double measured = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::string context = "all";
  std::vector<std::string> perturb;
  double tol = 1e-6;  ///< closed-form comparisons
  QuadratureCfg quad;
  double h = 1e-5;  ///< finite-difference step
};

/// Names of all invariants, in report order.
std::vector<std::string> check_names();

/// Runs the invariants whose context matches (or all); a perturbed invariant
/// adds 1e-3 (1 + x^2) to the object it checks.
std::vector<Check> run_verify(const VerifyOptions& opts);

}  // namespace pseudoanalytic::cli
