#pragma once

#include <vector>

#include "pseudoanalytic/field.hpp"
#include "pseudoanalytic/quadrature.hpp"

namespace pseudoanalytic {

/// Real 1-form built from a Binumber integrand h.
///   RealLine:     Re(h dzeta)           = Re h dx + sigma Im h dy
///   Antigradient: 2(Phi1 dx - sigma Phi2 dy), so dzbar of the integral is Phi.
enum class FormKind { RealLine, Antigradient };

/// Base point, path construction and quadrature shared by integrals that are
/// evaluated together.
struct IntegralSpec {
  Point base;
  PathPolicy policy;
  QuadratureCfg quad;
  std::vector<Point> punctures;
};

bool operator==(const IntegralSpec& a, const IntegralSpec& b);

/// Real field z -> c + integral of the form from spec.base to z along the
/// path built by spec.policy.
BiField integral_field(FormKind kind, const BiField& integrand, const IntegralSpec& spec, double c,
                       Domain domain);

/// c + integral of the form along an explicit polyline.
double integrate_along(FormKind kind, const BiField& integrand, const Path& path, double c,
                       EvalMode mode = EvalMode::Sweep);

}  // namespace pseudoanalytic
