#pragma once

#include <optional>
#include <vector>

#include "pseudoanalytic/bers.hpp"
#include "pseudoanalytic/vekua.hpp"

namespace pseudoanalytic {

struct TransplantConfig {
  /// Integration origin of the antigradient.  Positive powers use their
  /// center when unset; negative powers and general fields require it.
  std::optional<Point> base_point;
  PathPolicy path;
  /// Unset: pin Im w = 0 at the center for positive powers, c = 0 otherwise.
  std::optional<ConstantPolicy> constant;
  QuadratureCfg quad;
  /// Check q(f) = q(g) and the compatibility of the integrand.
  bool check_preconditions = true;
};

/// ContextMismatch unless f and g share q to relative 1e-8 on a probe grid.
void check_same_potential(const SchrodingerContext& f_ctx, const SchrodingerContext& g_ctx,
                          int probe = 20);

/// T_{f,g}[W] = Re W + e g^-1 Abar[e g^2 dzbar(g^-1 Re W)] (elliptic); the
/// hyperbolic operator carries the extra sign of the conjugate construction.
BiField transplant(const SchrodingerContext& f_ctx, const SchrodingerContext& g_ctx,
                   const BiField& W, const TransplantConfig& cfg);

/// Formal power of the g-equation with the order, center and coefficient of
/// Zf.  Order zero is built directly from the pair (g, e/g).
FormalPower transplant_formal_power(const SchrodingerContext& f_ctx,
                                    const SchrodingerContext& g_ctx, const FormalPower& Zf,
                                    const TransplantConfig& cfg = {});

/// Negative-order power of the g-equation; cfg.base_point (z1) is required
/// and the domain is punctured at the center.
FormalPower transplant_negative_power(const SchrodingerContext& f_ctx,
                                      const SchrodingerContext& g_ctx, const FormalPower& Zf,
                                      const TransplantConfig& cfg);

/// a / (z - z0) as a formal power of order -1 for f = 1.
FormalPower simple_pole(Signature sig, const Binumber& a, Point z0, const Domain& domain);

/// a (z - z0)^n for f = 1, n of either sign.
FormalPower analytic_power(Signature sig, int n, const Binumber& a, Point z0,
                           const Domain& domain);

/// Context sharing q with g together with its own order -1 power.
struct KernelCompanion {
  SchrodingerContext ctx;
  FormalPower pole;
};

/// Cauchy kernel Z_g^(-1)(a, z0; .) by transplanting a/(z - z0) from f = 1,
/// which needs q(g) = 0 (ContextMismatch otherwise), or from a companion.
FormalPower cauchy_kernel(const SchrodingerContext& g_ctx, const Binumber& a, Point z0,
                          const TransplantConfig& cfg,
                          const std::optional<KernelCompanion>& companion = std::nullopt);

/// Pairs (F_m, G_m), m = 0..M, of the generating sequence that starts at the
/// main pair of `ctx`.  Z_0^(m+1)(1) and Z_0^(m+1)(e) are built in `via`,
/// whose main pair must be period one (nullopt: ctx itself), and transplanted
/// to ctx; m differentiations with the 1/n factors give Z_m^(1), from which
/// successor_from_powers yields (F_{m+1}, G_{m+1}).
std::vector<GeneratingPair> successor_sequence(const SchrodingerContext& ctx, int M, Point z0,
                                               const std::optional<SchrodingerContext>& via = {},
                                               const RecursionCfg& rc = {},
                                               const TransplantConfig& tc = {});

/// e W: maps solutions of the f-equation to solutions of the 1/f-equation.
BiField to_reciprocal(const BiField& W);
SchrodingerContext reciprocal_context(const SchrodingerContext& ctx);

}  // namespace pseudoanalytic
