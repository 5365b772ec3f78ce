#pragma once

#include <vector>

#include "pseudoanalytic/field.hpp"

namespace pseudoanalytic::oracles {

/// Closed forms for f = y^2 and g = (1 + x y^3)/y on x > 0, y > 0, as fields
/// built directly from the formulas.

/// Z_f^(n)(a, z0; z), n = 0, 1, 2.  With `printed_term` the real part of
/// Z_f^(2)(1) carries -2 y0 y instead of -2 y0^5 y.
BiField zf(int n, const Binumber& a, Point z0, bool printed_term = false);

/// Z_g^(n)(a, z0; z), n = 0, 1, 2.
BiField zg(int n, const Binumber& a, Point z0);

/// Successor pair of (g, i/g).
BiField F1(Point z0);
BiField G1(Point z0);
/// Second successor with the differential-relation normalization; the
/// unnormalized route gives twice these.
BiField F2(Point z0);
BiField G2(Point z0);

/// 1/2 (y/y0)^2 g(z0)/g(z), the value asserted for Im(conj(F1) G1).
double im_F1G1_stated(Point z, Point z0);
/// (y/y0)^2 g(z0)/g(z), the actual value.
double im_F1G1(Point z, Point z0);

/// Printed Cauchy kernel for g = x y, a = 1: real part (x-x0)/r^2 and
/// imaginary part Abar/(x y) with the log term ln(r^2/(x^2+y^2)) and the
/// principal arctangent.
Binumber kernel_printed(Point z, Point z0);

/// Kernel whose imaginary part is the antigradient integrated from `base`
/// with c = 0, using the log term ln r^2 and the argument of z - z0 tracked
/// continuously along the polyline `path` from base to z.
Binumber kernel_corrected(Point z, Point z0, const std::vector<Point>& path);

}  // namespace pseudoanalytic::oracles
