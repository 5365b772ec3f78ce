#include "pseudoanalytic/vekua.hpp"

#include <algorithm>
#include <cmath>

namespace pseudoanalytic {

MainVekua make_vekua(const SchrodingerContext& ctx) {
  return {ctx, dzbar(ctx.f) / ctx.f};
}

PAnalyticSystem make_p_analytic(const SchrodingerContext& ctx) { return {ctx.f * ctx.f}; }

double vekua_residual(const BiField& coeff, const BiField& W, Point at) {
  const Jet j = W.jet(at, 1);
  return norm(d_zbar(j).value() - coeff(at) * conj(j.value()));
}

double vekua_residual(const MainVekua& eq, const BiField& W, Point at) {
  return vekua_residual(eq.coeff, W, at);
}

namespace {

/// Abar (signature-aware) of Phi from z0 with the additive constant chosen by
/// `constant`, where the constructed part is outer * (Abar + c).
BiField pinned_antigradient(const BiField& Phi, const BiField& outer, Point z0,
                            const ConjugateCfg& cfg) {
  if (cfg.check_preconditions) check_compatibility(Phi, Phi.domain().sample_grid(5, 1e-2));
  BiField A = antigradient_field(Phi, z0, cfg.policy, cfg.quad, 0.0);
  if (cfg.constant.kind == ConstantPolicy::Kind::Zero) return outer * A;
  const Point p = cfg.constant.at;
  const double c = cfg.constant.value / outer(p).re - (p == z0 ? 0.0 : A(p).re);
  return outer * antigradient_field(Phi, z0, cfg.policy, cfg.quad, c);
}

}  // namespace

BiField conjugate_imag(const SchrodingerContext& ctx, const BiField& W1, Point z0,
                       const ConjugateCfg& cfg) {
  require(W1.sig() == ctx.sig, "conjugate_imag: signature mismatch");
  const Signature s = ctx.sig;
  const Binumber e = Binumber::unit(s);
  const BiField& f = ctx.f;
  const BiField Phi = e * (f * f * dzbar(real_part(W1) / f));
  return pinned_antigradient(Phi, (-sigma(s)) / f, z0, cfg);
}

BiField conjugate_real(const SchrodingerContext& ctx, const BiField& W2, Point z0,
                       const ConjugateCfg& cfg) {
  require(W2.sig() == ctx.sig, "conjugate_real: signature mismatch");
  const Binumber e = Binumber::unit(ctx.sig);
  const BiField& f = ctx.f;
  const BiField Phi = e * (dzbar(f * real_part(W2)) / (f * f));
  return pinned_antigradient(Phi, -1.0 * f, z0, cfg);
}

double factorization_residual(const SchrodingerContext& ctx, const BiField& phi, Point at) {
  const BiField& f = ctx.f;
  const BiField p = real_part(phi);
  const BiField fz = dz(f) / f, fzb = dzbar(f) / f;
  const SecondOrder op = ctx.sig == Signature::Elliptic ? SecondOrder::laplacian : SecondOrder::box;
  const double lhs = 0.25 * (second_order(p, op, at) - ctx.q(at).re * p(at).re);
  const BiField U = dz(p) - fz * p;
  const BiField V = dzbar(p) - fzb * p;
  const Binumber first = (dzbar(U) + fz * conj(U))(at);
  const Binumber second = (dz(V) + fzb * conj(V))(at);
  const Binumber L(lhs, 0.0, ctx.sig);
  return std::max(norm(first - L), norm(second - L));
}

BiField apply_B(const BiField& omega, const BiField& f, BDirection direction) {
  if (direction == BDirection::forward)
    return f * real_part(omega) + imag_component(omega) / f;
  return real_part(omega) / f + f * imag_component(omega);
}

BiField apply_Pi(const BiField& omega, const BiField& f) {
  return f * dzbar(real_part(omega)) + dzbar(imag_component(omega)) / f;
}

BiField apply_V(const BiField& omega, const BiField& f) {
  return dzbar(omega) - dzbar(f) / f * conj(omega);
}

double p_analytic_residual(const PAnalyticSystem& sys, const BiField& omega, Point at) {
  const Jet j = omega.jet(at, 1);
  const double p = sys.p(at).re;
  const double phx = j.at(1, 0).re, phy = j.at(0, 1).re;
  const double psx = j.at(1, 0).im, psy = j.at(0, 1).im;
  const double s = sigma(omega.sig());
  return std::max(std::fabs(phx - psy / p), std::fabs(phy - s * psx / p));
}

double relation_check(const BiField& f, const BiField& omega, Point at) {
  return norm((apply_V(apply_B(omega, f), f) - apply_Pi(omega, f))(at));
}

}  // namespace pseudoanalytic
