#pragma once

#include <functional>
#include <memory>

#include "pseudoanalytic/algebra.hpp"
#include "pseudoanalytic/geometry.hpp"
#include "pseudoanalytic/jet.hpp"

namespace pseudoanalytic {

namespace detail {
class Node;
struct Plan;
}  // namespace detail

/// Sweep evaluates every integral sharing a base point and path in one pass
/// along the path (inner integrals at the nodes of outer ones).  Nested
/// evaluates each integral by its own adaptive quadrature, recursively; it is
/// the slow reference used to cross-check Sweep.
enum class EvalMode { Sweep, Nested };

enum class DerivMode { Analytic, FiniteDifference };
enum class Wirtinger { dz, dzbar };
enum class SecondOrder { laplacian, box };

/// Binumber-valued field on a planar domain.
///
/// A field is an immutable expression graph.  Derivatives come from exact
/// Taylor propagation through the graph; leaves built from black-box
/// functions use central differences with one Richardson step.
class BiField {
 public:
  BiField() = default;
  BiField(std::shared_ptr<const detail::Node> node, Domain domain);

  using ValueFn = std::function<Binumber(const Binumber&, const Binumber&)>;
  using JetFn = std::function<Jet(const Jet&, const Jet&)>;

  static BiField from_functions(Signature sig, Domain domain, ValueFn value, JetFn jet);

  /// Field from a generic callable fn(x, y), instantiated both for Binumber
  /// and Jet arguments; x and y carry the signature.
  template <class Fn>
  static BiField analytic(Signature sig, Domain domain, Fn fn) {
    return from_functions(
        sig, std::move(domain),
        [fn](const Binumber& x, const Binumber& y) -> Binumber { return Binumber(fn(x, y)); },
        [fn](const Jet& x, const Jet& y) -> Jet { return Jet(fn(x, y)); });
  }

  /// Black-box field; derivatives by finite differences with step
  /// h * (1 + |coordinate|) (h <= 0 selects 1e-5).  Supports up to second order.
  static BiField finite_difference(Signature sig, Domain domain, std::function<Binumber(Point)> fn,
                                   double h = 0.0);

  static BiField constant(const Binumber& c, Domain domain = Domain::plane());

  Binumber operator()(Point p) const { return value(p); }
  Binumber value(Point p, EvalMode mode = EvalMode::Sweep) const;
  /// Taylor expansion of the given order at p.
  Jet jet(Point p, int order, EvalMode mode = EvalMode::Sweep) const;

  bool valid() const { return static_cast<bool>(node_); }
  Signature sig() const;
  DerivMode deriv_mode() const;
  const Domain& domain() const { return domain_; }
  BiField with_domain(Domain domain) const;
  const std::shared_ptr<const detail::Node>& node() const { return node_; }

 private:
  void check_point(Point p) const;
  const detail::Plan& plan() const;

  std::shared_ptr<const detail::Node> node_;
  Domain domain_;
  std::shared_ptr<struct PlanCache> plan_;
};

BiField operator+(const BiField& a, const BiField& b);
BiField operator-(const BiField& a, const BiField& b);
BiField operator*(const BiField& a, const BiField& b);
BiField operator/(const BiField& a, const BiField& b);
BiField operator-(const BiField& a);

BiField operator+(const BiField& a, const Binumber& c);
BiField operator*(const BiField& a, const Binumber& c);
BiField operator*(const Binumber& c, const BiField& a);
BiField operator+(const BiField& a, double c);
BiField operator-(const BiField& a, double c);
BiField operator*(const BiField& a, double c);
BiField operator*(double c, const BiField& a);
BiField operator/(const BiField& a, double c);
BiField operator/(double c, const BiField& a);

BiField conj(const BiField& a);
/// P+ W = Re W as a field.
BiField real_part(const BiField& a);
/// Im W as a real field.
BiField imag_part(const BiField& a);
/// P- W = e Im W.
BiField imag_component(const BiField& a);
BiField times_unit(const BiField& a);
BiField inverse(const BiField& a);
BiField dz(const BiField& a);
BiField dzbar(const BiField& a);
/// Laplacian (elliptic) or wave operator (hyperbolic) of a field, per `which`.
BiField second_order_field(const BiField& a, SecondOrder which);

/// Coordinate fields x and y (t in the hyperbolic case).
BiField coordinate_x(Signature sig, Domain domain = Domain::plane());
BiField coordinate_y(Signature sig, Domain domain = Domain::plane());

/// Wirtinger derivative at a point.  Elliptic dzbar = (dx + i dy)/2,
/// dz = (dx - i dy)/2; hyperbolic dzbar = (dx - j dt)/2, dz = (dx + j dt)/2.
Binumber wirtinger(const BiField& field, Wirtinger which, Point at);

/// Laplacian or wave operator of a real field at a point.
double second_order(const BiField& field, SecondOrder which, Point at);

}  // namespace pseudoanalytic
