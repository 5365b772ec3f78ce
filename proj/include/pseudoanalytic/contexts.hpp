#pragma once

#include <string>
#include <vector>

#include "pseudoanalytic/bers.hpp"
#include "pseudoanalytic/schrodinger.hpp"

namespace pseudoanalytic::contexts {

/// f = y^2 on x > 0, y > 0 (q = 2/y^2).
SchrodingerContext f_y2();
/// g = (1 + x y^3)/y on x > 0, y > 0; same q as f_y2.
SchrodingerContext g_1xy3();
/// g = x y on x > 0, y > 0 (harmonic).
SchrodingerContext g_xy();
/// f = 1 on the plane.
SchrodingerContext unit(Signature sig = Signature::Elliptic);
/// f = 1, hyperbolic, on the plane.
SchrodingerContext hyperbolic_unit();
/// f = 1 + x^2 + t^2, hyperbolic (box f = 0), on the plane.
SchrodingerContext hyperbolic_quadric();

/// Builtin context by name; ContractViolation for unknown names.
SchrodingerContext by_name(const std::string& name);
const std::vector<std::string>& names();

/// The pair (f, e/f) of the main Vekua equation.
GeneratingPair main_pair(const SchrodingerContext& ctx);

/// Same context restricted to another domain.
SchrodingerContext restrict(const SchrodingerContext& ctx, const Domain& domain);

}  // namespace pseudoanalytic::contexts
