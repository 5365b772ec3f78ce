#include "pseudoanalytic/transplant.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "pseudoanalytic/contexts.hpp"

namespace pseudoanalytic {

void check_same_potential(const SchrodingerContext& f_ctx, const SchrodingerContext& g_ctx,
                          int probe) {
  if (f_ctx.sig != g_ctx.sig) fail(ErrorKind::ContextMismatch, "contexts differ in signature");
  const Domain dom = f_ctx.domain.intersect(g_ctx.domain);
  for (const Point& p : dom.sample_grid(probe, 1e-2)) {
    const double qf = f_ctx.q(p).re, qg = g_ctx.q(p).re;
    const double scale = std::max({std::fabs(qf), std::fabs(qg), 1.0});
    if (std::fabs(qf - qg) > 1e-8 * scale) {
      std::ostringstream os;
      os << "potentials differ at (" << p.x << ", " << p.y << "): " << qf << " vs " << qg;
      fail(ErrorKind::ContextMismatch, os.str());
    }
  }
}

namespace {

BiField transplant_impl(const SchrodingerContext& f_ctx, const SchrodingerContext& g_ctx,
                        const BiField& W, Point base, const ConstantPolicy& constant,
                        const TransplantConfig& cfg) {
  if (cfg.check_preconditions) check_same_potential(f_ctx, g_ctx);
  const Domain dom = g_ctx.domain.intersect(W.domain());
  const SchrodingerContext g = contexts::restrict(g_ctx, dom);
  const BiField W1 = real_part(W).with_domain(dom);
  ConjugateCfg cc{cfg.path, cfg.quad, constant, cfg.check_preconditions};
  const BiField W2 = conjugate_imag(g, W1, base, cc);
  return (W1 + Binumber::unit(W.sig()) * W2).with_domain(dom);
}

}  // namespace

BiField transplant(const SchrodingerContext& f_ctx, const SchrodingerContext& g_ctx,
                   const BiField& W, const TransplantConfig& cfg) {
  require(cfg.base_point.has_value(), "transplant: base point required");
  return transplant_impl(f_ctx, g_ctx, W, *cfg.base_point,
                         cfg.constant.value_or(ConstantPolicy::zero()), cfg);
}

FormalPower transplant_formal_power(const SchrodingerContext& f_ctx,
                                    const SchrodingerContext& g_ctx, const FormalPower& Zf,
                                    const TransplantConfig& cfg) {
  require(Zf.order >= 0, "transplant_formal_power: non-negative order expected");
  require(!cfg.base_point || *cfg.base_point == Zf.center,
          "transplant_formal_power: base point must be the center");
  if (Zf.order == 0) {
    if (cfg.check_preconditions) check_same_potential(f_ctx, g_ctx);
    return formal_power_zero(contexts::main_pair(g_ctx), Zf.coeff, Zf.center, Zf.pair_index);
  }
  const ConstantPolicy c = cfg.constant.value_or(ConstantPolicy::pin_at(Zf.center, 0.0));
  BiField w = transplant_impl(f_ctx, g_ctx, Zf.value, Zf.center, c, cfg);
  return {Zf.order, Zf.center, Zf.coeff, w, Zf.pair_index};
}

FormalPower transplant_negative_power(const SchrodingerContext& f_ctx,
                                      const SchrodingerContext& g_ctx, const FormalPower& Zf,
                                      const TransplantConfig& cfg) {
  require(Zf.order < 0, "transplant_negative_power: negative order expected");
  require(cfg.base_point.has_value(), "transplant_negative_power: base point z1 required");
  require(!(*cfg.base_point == Zf.center), "transplant_negative_power: z1 must differ from z0");
  const SchrodingerContext g =
      contexts::restrict(g_ctx, g_ctx.domain.with_puncture(Zf.center));
  BiField w = transplant_impl(f_ctx, g, Zf.value, *cfg.base_point,
                              cfg.constant.value_or(ConstantPolicy::zero()), cfg);
  return {Zf.order, Zf.center, Zf.coeff, w, Zf.pair_index};
}

FormalPower analytic_power(Signature sig, int n, const Binumber& a, Point z0,
                           const Domain& domain) {
  require(a.sig == sig, "analytic_power: signature mismatch");
  const Binumber e = Binumber::unit(sig);
  const Binumber c = Binumber::real(z0.x, sig) + e * z0.y;
  const Domain dom = n < 0 ? domain.with_puncture(z0) : domain;
  BiField v = BiField::analytic(sig, dom, [a, e, c, n](const auto& x, const auto& y) {
    return a * pow(x + y * e - c, n);
  });
  return {n, z0, a, v, 0};
}

FormalPower simple_pole(Signature sig, const Binumber& a, Point z0, const Domain& domain) {
  return analytic_power(sig, -1, a, z0, domain);
}

FormalPower cauchy_kernel(const SchrodingerContext& g_ctx, const Binumber& a, Point z0,
                          const TransplantConfig& cfg,
                          const std::optional<KernelCompanion>& companion) {
  if (companion) {
    const FormalPower& p = companion->pole;
    require(p.order == -1 && p.center == z0 && norm(p.coeff - a) < 1e-14,
            "cauchy_kernel: companion pole must match order, center and coefficient");
    return transplant_negative_power(companion->ctx, g_ctx, p, cfg);
  }
  const SchrodingerContext f = contexts::restrict(contexts::unit(g_ctx.sig), g_ctx.domain);
  check_same_potential(f, g_ctx);
  return transplant_negative_power(f, g_ctx, simple_pole(g_ctx.sig, a, z0, f.domain), cfg);
}

std::vector<GeneratingPair> successor_sequence(const SchrodingerContext& ctx, int M, Point z0,
                                               const std::optional<SchrodingerContext>& via,
                                               const RecursionCfg& rc, const TransplantConfig& tc) {
  require(M >= 0, "successor_sequence: M must be non-negative");
  const SchrodingerContext& src = via ? *via : ctx;
  const GeneratingSequence src_seq = GeneratingSequence::constant(contexts::main_pair(src));
  std::vector<GeneratingPair> pairs{contexts::main_pair(ctx)};
  const std::array<Binumber, 2> coeffs{Binumber::real(1.0, ctx.sig), Binumber::unit(ctx.sig)};
  for (int m = 0; m < M; ++m) {
    std::vector<FormalPower> Z;
    for (const Binumber& a : coeffs) {
      const FormalPower Zs = formal_power(src_seq, m + 1, a, z0, 0, rc);
      BiField w = via ? transplant_formal_power(src, ctx, Zs, tc).value : Zs.value;
      for (int j = 0; j < m; ++j) w = fg_derivative(pairs[j], w) * (1.0 / (m + 1 - j));
      Z.push_back({1, z0, a, w, m});
    }
    pairs.push_back(successor_from_powers(pairs[m], Z[0], Z[1]));
  }
  return pairs;
}

BiField to_reciprocal(const BiField& W) { return Binumber::unit(W.sig()) * W; }

SchrodingerContext reciprocal_context(const SchrodingerContext& ctx) {
  return make_context(inverse(ctx.f));
}

}  // namespace pseudoanalytic
