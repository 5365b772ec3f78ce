#pragma once

#include <boost/container/small_vector.hpp>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "pseudoanalytic/field.hpp"
#include "pseudoanalytic/line_integral.hpp"

namespace pseudoanalytic::detail {

class Node;
class IntegralNode;
using NodePtr = std::shared_ptr<const Node>;

/// Per-point evaluation state: the point, integral values known there, and a
/// memo for higher-order jets.
class EvalCtx {
 public:
  EvalCtx(Point p, EvalMode mode) : p_(p), mode_(mode) {}

  Point point() const { return p_; }
  EvalMode mode() const { return mode_; }

  Binumber value(const Node& n);
  Jet jet(const Node& n, int order);

  const double* integral(const IntegralNode* n) const {
    for (const auto& e : integrals_)
      if (e.first == n) return &e.second;
    return nullptr;
  }
  void set_integral(const IntegralNode* n, double v) { integrals_.emplace_back(n, v); }

 private:
  Point p_;
  EvalMode mode_;
  boost::container::small_vector<std::pair<const IntegralNode*, double>, 8> integrals_;
  std::vector<std::pair<const Node*, Jet>> memo_;
};

class Node {
 public:
  Node(Signature sig, bool fd) : sig_(sig), fd_(fd) {}
  virtual ~Node() = default;

  virtual Binumber value(EvalCtx& ctx) const = 0;
  virtual Jet jet(EvalCtx& ctx, int order) const = 0;
  virtual void children(std::vector<const Node*>& out) const { (void)out; }
  virtual const IntegralNode* as_integral() const { return nullptr; }

  Signature sig() const { return sig_; }
  bool finite_difference() const { return fd_; }

 private:
  Signature sig_;
  bool fd_;
};

/// Integral nodes sharing one spec, ordered inner before outer.
struct Group {
  const IntegralSpec* spec = nullptr;
  std::vector<const IntegralNode*> members;
};

struct Plan {
  std::vector<Group> groups;
};

/// Integral nodes reachable from `root` (through integrands too), in
/// dependency order, grouped by spec.
Plan make_plan(const Node& root);
std::vector<const IntegralNode*> reachable_integrals(const Node& root);

class IntegralNode final : public Node {
 public:
  IntegralNode(FormKind kind, NodePtr integrand, IntegralSpec spec, double c);

  Binumber value(EvalCtx& ctx) const override;
  Jet jet(EvalCtx& ctx, int order) const override;
  void children(std::vector<const Node*>& out) const override { out.push_back(integrand_.get()); }
  const IntegralNode* as_integral() const override { return this; }

  FormKind kind() const { return kind_; }
  const Node& integrand() const { return *integrand_; }
  const IntegralSpec& spec() const { return spec_; }
  double constant() const { return c_; }

  /// Tangential form value: P dx + Q dy for displacement d.
  double form(const Binumber& h, Point d) const;

 private:
  const Group& own_group() const;

  FormKind kind_;
  NodePtr integrand_;
  IntegralSpec spec_;
  double c_;
  mutable std::once_flag group_once_;
  mutable Group group_;
};

/// Values of all group members at `end`, integrating along the routed path.
std::vector<double> sweep(const Group& group, Point end, EvalMode mode);

/// Same along an explicit vertex list.
std::vector<double> sweep_polyline(const Group& group, const std::vector<Point>& vertices,
                                   EvalMode mode);

}  // namespace pseudoanalytic::detail
