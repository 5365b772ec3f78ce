#include "pseudoanalytic/contexts.hpp"

namespace pseudoanalytic::contexts {

namespace {

Domain quadrant() { return Domain::quadrant({0.0, 10.0, 0.0, 10.0}); }

}  // namespace

SchrodingerContext f_y2() {
  return make_context(BiField::analytic(Signature::Elliptic, quadrant(),
                                        [](const auto&, const auto& y) { return y * y; }));
}

SchrodingerContext g_1xy3() {
  return make_context(BiField::analytic(Signature::Elliptic, quadrant(), [](const auto& x, const auto& y) {
    return (1.0 + x * y * y * y) / y;
  }));
}

SchrodingerContext g_xy() {
  return make_context(BiField::analytic(Signature::Elliptic, quadrant(),
                                        [](const auto& x, const auto& y) { return x * y; }));
}

SchrodingerContext unit(Signature sig) {
  return make_context(BiField::constant(Binumber::real(1.0, sig), Domain::plane()));
}

SchrodingerContext hyperbolic_unit() { return unit(Signature::Hyperbolic); }

SchrodingerContext hyperbolic_quadric() {
  return make_context(BiField::analytic(Signature::Hyperbolic, Domain::plane(),
                                        [](const auto& x, const auto& t) { return 1.0 + x * x + t * t; }));
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"f_y2", "g_1xy3", "g_xy", "unit", "hyperbolic_unit",
                                          "hyperbolic_quadric"};
  return n;
}

SchrodingerContext by_name(const std::string& name) {
  if (name == "f_y2") return f_y2();
  if (name == "g_1xy3") return g_1xy3();
  if (name == "g_xy") return g_xy();
  if (name == "unit") return unit();
  if (name == "hyperbolic_unit") return hyperbolic_unit();
  if (name == "hyperbolic_quadric") return hyperbolic_quadric();
  throw ContractViolation("unknown context '" + name + "'");
}

GeneratingPair main_pair(const SchrodingerContext& ctx) {
  return GeneratingPair::make(ctx.f, Binumber::unit(ctx.sig) * inverse(ctx.f));
}

SchrodingerContext restrict(const SchrodingerContext& ctx, const Domain& domain) {
  SchrodingerContext out = ctx;
  out.domain = domain;
  out.f = ctx.f.with_domain(domain);
  out.q = ctx.q.with_domain(domain);
  out.q1 = ctx.q1.with_domain(domain);
  return out;
}

}  // namespace pseudoanalytic::contexts
