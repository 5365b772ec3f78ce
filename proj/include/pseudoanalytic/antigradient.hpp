#pragma once

#include "pseudoanalytic/field.hpp"
#include "pseudoanalytic/line_integral.hpp"
#include "pseudoanalytic/quadrature.hpp"

namespace pseudoanalytic {

/// Elliptic |d_y Phi1 - d_x Phi2|, hyperbolic |d_t Phi1 + d_x Phi2|.
double compatibility_residual(const BiField& Phi, Point at);

/// Routed path from z0 to z avoiding the punctures of `domain`.
Path make_path(Point z0, Point z, const Domain& domain, const PathPolicy& policy = {},
               const QuadratureCfg& quad = {});

/// Elliptic antigradient 2 int (Phi1 dx + Phi2 dy) + c along `path`.
/// Compatibility is checked at sample points of the path (NotConservative).
double abar(const BiField& Phi, Point z0, Point z, const Path& path, double c = 0.0);

/// Hyperbolic antigradient 2 (int Phi1 dx - int Phi2 dt) + c along `path`.
double abar_h(const BiField& Phi, Point z0, Point z, const Path& path, double c = 0.0);

/// The antigradient as a real field with base point z0; dzbar of it is Phi.
BiField antigradient_field(const BiField& Phi, Point z0, const PathPolicy& policy = {},
                           const QuadratureCfg& quad = {}, double c = 0.0);

/// Throws NotConservative when the compatibility residual at any point exceeds
/// the tolerance relative to the size of the first derivatives of Phi.
void check_compatibility(const BiField& Phi, const std::vector<Point>& samples);

}  // namespace pseudoanalytic
