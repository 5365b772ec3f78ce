#pragma once

#include <optional>

#include "pseudoanalytic/antigradient.hpp"
#include "pseudoanalytic/schrodinger.hpp"

namespace pseudoanalytic {

/// W_zbar = (f_zbar / f) conj(W).
struct MainVekua {
  SchrodingerContext ctx;
  BiField coeff;  ///< f_zbar / f
};

MainVekua make_vekua(const SchrodingerContext& ctx);

/// phi_x = psi_y / p, phi_y = -sigma psi_x / p with p = f^2.
struct PAnalyticSystem {
  BiField p;
};

PAnalyticSystem make_p_analytic(const SchrodingerContext& ctx);

/// Euclidean norm of W_zbar - coeff conj(W) at a point.
double vekua_residual(const MainVekua& eq, const BiField& W, Point at);
/// Same for an explicit coefficient field.
double vekua_residual(const BiField& coeff, const BiField& W, Point at);

/// Additive constant of an antigradient: zero, or chosen so that the
/// constructed part takes `value` at `at`.
struct ConstantPolicy {
  enum class Kind { Zero, PinAt } kind = Kind::Zero;
  Point at{};
  double value = 0.0;
  static ConstantPolicy zero() { return {}; }
  static ConstantPolicy pin_at(Point at, double value) { return {Kind::PinAt, at, value}; }
};

struct ConjugateCfg {
  PathPolicy policy;
  QuadratureCfg quad;
  ConstantPolicy constant;
  /// Check the compatibility of the antigradient integrand on a sample grid.
  bool check_preconditions = true;
};

/// Imaginary part W2 of the Vekua solution with real part W1:
///   elliptic   W2 =  f^-1 Abar  [i f^2 dzbar(f^-1 W1)]
///   hyperbolic W2 = -f^-1 Abar_h[j f^2 dzbar(f^-1 W1)]
/// with base point z0.
BiField conjugate_imag(const SchrodingerContext& ctx, const BiField& W1, Point z0,
                       const ConjugateCfg& cfg = {});

/// Real part W1 = -f Abar[e f^-2 dzbar(f W2)] for a given imaginary part W2.
BiField conjugate_real(const SchrodingerContext& ctx, const BiField& W2, Point z0,
                       const ConjugateCfg& cfg = {});

/// Largest deviation between 1/4 (L - q) phi and the two factorized forms
///   (dzbar + f_z/f C)(dz - f_z/f C) phi,  (dz + f_zbar/f C)(dzbar - f_zbar/f C) phi
/// with L the Laplacian or wave operator.
double factorization_residual(const SchrodingerContext& ctx, const BiField& phi, Point at);

enum class BDirection { forward, inverse };

/// forward: f P+ w + f^-1 P- w; inverse: f^-1 P+ w + f P- w.
BiField apply_B(const BiField& omega, const BiField& f, BDirection direction = BDirection::forward);

/// Pi w = f dzbar(P+ w) + f^-1 dzbar(P- w).
BiField apply_Pi(const BiField& omega, const BiField& f);

/// V w = dzbar(w) - (f_zbar/f) conj(w).
BiField apply_V(const BiField& omega, const BiField& f);

double p_analytic_residual(const PAnalyticSystem& sys, const BiField& omega, Point at);

/// |V B w - Pi w| at a point.
double relation_check(const BiField& f, const BiField& omega, Point at);

}  // namespace pseudoanalytic
