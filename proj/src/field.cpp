#include "pseudoanalytic/field.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

#include "node.hpp"

namespace pseudoanalytic {

namespace detail {

Binumber EvalCtx::value(const Node& n) { return n.value(*this); }

Jet EvalCtx::jet(const Node& n, int order) {
  if (order == 0) return Jet::constant(n.value(*this), 0);
  if (order == 1) return n.jet(*this, 1);
  for (auto& e : memo_)
    if (e.first == &n && e.second.order() >= order)
      return e.second.order() == order ? e.second : e.second.truncated(order);
  Jet j = n.jet(*this, order);
  for (auto& e : memo_)
    if (e.first == &n) {
      e.second = j;
      return j;
    }
  memo_.emplace_back(&n, j);
  return j;
}

namespace {

class ConstNode final : public Node {
 public:
  explicit ConstNode(Binumber c) : Node(c.sig, false), c_(c) {}
  Binumber value(EvalCtx&) const override { return c_; }
  Jet jet(EvalCtx&, int order) const override { return Jet::constant(c_, order); }

 private:
  Binumber c_;
};

class AnalyticNode final : public Node {
 public:
  AnalyticNode(Signature sig, BiField::ValueFn v, BiField::JetFn j)
      : Node(sig, false), v_(std::move(v)), j_(std::move(j)) {}

  Binumber value(EvalCtx& ctx) const override {
    const Point p = ctx.point();
    Binumber r = v_(Binumber::real(p.x, sig()), Binumber::real(p.y, sig()));
    check_same(r.sig, sig());
    return r;
  }

  Jet jet(EvalCtx& ctx, int order) const override {
    if (order == 0) return Jet::constant(value(ctx), 0);
    const Point p = ctx.point();
    Jet r = j_(Jet::coordinate(p.x, 0, sig(), order), Jet::coordinate(p.y, 1, sig(), order));
    check_same(r.sig(), sig());
    return r;
  }

 private:
  BiField::ValueFn v_;
  BiField::JetFn j_;
};

class FdNode final : public Node {
 public:
  FdNode(Signature sig, std::function<Binumber(Point)> fn, double h, std::vector<Point> punctures)
      : Node(sig, true), fn_(std::move(fn)), h_(h > 0.0 ? h : 1e-5), punctures_(std::move(punctures)) {}

  Binumber value(EvalCtx& ctx) const override { return eval(ctx.point()); }

  Jet jet(EvalCtx& ctx, int order) const override {
    if (order > 2)
      throw ContractViolation("finite-difference fields provide derivatives up to second order");
    const Point p = ctx.point();
    Jet r(sig(), order);
    r[0] = eval(p);
    if (order == 0) return r;
    const double hx = h_ * (1.0 + std::fabs(p.x)), hy = h_ * (1.0 + std::fabs(p.y));
    const double reach = order == 2 ? kSecond * std::max(hx, hy) : std::max(hx, hy);
    for (const auto& q : punctures_)
      if (distance(p, q) < 2.0 * reach) {
        std::ostringstream os;
        os << "finite-difference stencil at (" << p.x << ", " << p.y << ") reaches a puncture";
        fail(ErrorKind::Stencil, os.str());
      }
    auto d1 = [&](double hh, bool alongx) {
      const Point e = alongx ? Point{hh, 0.0} : Point{0.0, hh};
      return (eval(p + e) - eval(p - e)) * (0.5 / hh);
    };
    auto rich1 = [&](double hh, bool alongx) {
      return (d1(0.5 * hh, alongx) * 4.0 - d1(hh, alongx)) * (1.0 / 3.0);
    };
    r.at(1, 0) = rich1(hx, true);
    r.at(0, 1) = rich1(hy, false);
    if (order == 2) {
      const double Hx = kSecond * hx, Hy = kSecond * hy;
      const Binumber f0 = r[0];
      auto d2 = [&](double hh, bool alongx) {
        const Point e = alongx ? Point{hh, 0.0} : Point{0.0, hh};
        return (eval(p + e) - f0 * 2.0 + eval(p - e)) * (1.0 / (hh * hh));
      };
      auto dxy = [&](double a, double b) {
        return (eval(p + Point{a, b}) - eval(p + Point{a, -b}) - eval(p + Point{-a, b}) +
                eval(p + Point{-a, -b})) *
               (0.25 / (a * b));
      };
      const Binumber fxx = (d2(0.5 * Hx, true) * 4.0 - d2(Hx, true)) * (1.0 / 3.0);
      const Binumber fyy = (d2(0.5 * Hy, false) * 4.0 - d2(Hy, false)) * (1.0 / 3.0);
      const Binumber fxy = (dxy(0.5 * Hx, 0.5 * Hy) * 4.0 - dxy(Hx, Hy)) * (1.0 / 3.0);
      r.at(2, 0) = fxx * 0.5;
      r.at(1, 1) = fxy;
      r.at(0, 2) = fyy * 0.5;
    }
    return r;
  }

 private:
  // Second differences use a step this many times larger than first ones.
  static constexpr double kSecond = 100.0;

  Binumber eval(Point p) const {
    Binumber r = fn_(p);
    check_same(r.sig, sig());
    return r;
  }

  std::function<Binumber(Point)> fn_;
  double h_;
  std::vector<Point> punctures_;
};

enum class UnOp { Neg, Conj, Re, Im, ImComp, TimesUnit, Inverse, Dz, Dzbar, Laplacian, Box };

class UnaryNode final : public Node {
 public:
  UnaryNode(UnOp op, NodePtr a) : Node(a->sig(), a->finite_difference()), op_(op), a_(std::move(a)) {}

  Binumber value(EvalCtx& ctx) const override {
    switch (op_) {
      case UnOp::Dz:
      case UnOp::Dzbar:
      case UnOp::Laplacian:
      case UnOp::Box:
        return jet(ctx, 0).value();
      default:
        break;
    }
    const Binumber v = ctx.value(*a_);
    switch (op_) {
      case UnOp::Neg: return -v;
      case UnOp::Conj: return conj(v);
      case UnOp::Re: return {v.re, 0.0, v.sig};
      case UnOp::Im: return {v.im, 0.0, v.sig};
      case UnOp::ImComp: return {0.0, v.im, v.sig};
      case UnOp::TimesUnit: return times_unit(v);
      case UnOp::Inverse: return inverse(v);
      default: break;
    }
    throw ContractViolation("unreachable unary op");
  }

  Jet jet(EvalCtx& ctx, int order) const override {
    switch (op_) {
      case UnOp::Dz: return d_z(ctx.jet(*a_, order + 1));
      case UnOp::Dzbar: return d_zbar(ctx.jet(*a_, order + 1));
      case UnOp::Laplacian:
      case UnOp::Box: {
        const Jet j = ctx.jet(*a_, order + 2);
        const Jet xx = j.d_x().d_x(), yy = j.d_y().d_y();
        return op_ == UnOp::Laplacian ? xx + yy : xx - yy;
      }
      default:
        break;
    }
    if (order == 0) return Jet::constant(value(ctx), 0);
    const Jet j = ctx.jet(*a_, order);
    switch (op_) {
      case UnOp::Neg: return -j;
      case UnOp::Conj: return conj(j);
      case UnOp::Re: return real_part(j);
      case UnOp::Im: return imag_part(j);
      case UnOp::ImComp: return times_unit(imag_part(j));
      case UnOp::TimesUnit: return times_unit(j);
      case UnOp::Inverse: return inverse(j);
      default: break;
    }
    throw ContractViolation("unreachable unary op");
  }

  void children(std::vector<const Node*>& out) const override { out.push_back(a_.get()); }

 private:
  UnOp op_;
  NodePtr a_;
};

enum class BinOp { Add, Sub, Mul, Div };

class BinaryNode final : public Node {
 public:
  BinaryNode(BinOp op, NodePtr a, NodePtr b)
      : Node(a->sig(), a->finite_difference() || b->finite_difference()),
        op_(op),
        a_(std::move(a)),
        b_(std::move(b)) {
    check_same(a_->sig(), b_->sig());
  }

  Binumber value(EvalCtx& ctx) const override {
    const Binumber u = ctx.value(*a_), v = ctx.value(*b_);
    switch (op_) {
      case BinOp::Add: return u + v;
      case BinOp::Sub: return u - v;
      case BinOp::Mul: return u * v;
      case BinOp::Div: return u / v;
    }
    throw ContractViolation("unreachable binary op");
  }

  Jet jet(EvalCtx& ctx, int order) const override {
    if (order == 0) return Jet::constant(value(ctx), 0);
    const Jet u = ctx.jet(*a_, order), v = ctx.jet(*b_, order);
    switch (op_) {
      case BinOp::Add: return u + v;
      case BinOp::Sub: return u - v;
      case BinOp::Mul: return u * v;
      case BinOp::Div: return u / v;
    }
    throw ContractViolation("unreachable binary op");
  }

  void children(std::vector<const Node*>& out) const override {
    out.push_back(a_.get());
    out.push_back(b_.get());
  }

 private:
  BinOp op_;
  NodePtr a_, b_;
};

void post_order(const Node* n, std::unordered_set<const Node*>& seen,
                std::vector<const IntegralNode*>& out) {
  if (!seen.insert(n).second) return;
  std::vector<const Node*> kids;
  n->children(kids);
  for (const Node* k : kids) post_order(k, seen, out);
  if (const IntegralNode* in = n->as_integral()) out.push_back(in);
}

NodePtr unary(UnOp op, const BiField& a) { return std::make_shared<UnaryNode>(op, a.node()); }

BiField wrap_unary(UnOp op, const BiField& a) { return BiField(unary(op, a), a.domain()); }

BiField wrap_binary(BinOp op, const BiField& a, const BiField& b) {
  return BiField(std::make_shared<BinaryNode>(op, a.node(), b.node()), a.domain().intersect(b.domain()));
}

}  // namespace

Plan make_plan(const Node& root) {
  std::unordered_set<const Node*> seen;
  std::vector<const IntegralNode*> order;
  post_order(&root, seen, order);
  Plan plan;
  for (const IntegralNode* n : order) {
    Group* g = nullptr;
    for (auto& cand : plan.groups)
      if (*cand.spec == n->spec()) g = &cand;
    if (!g) {
      plan.groups.push_back(Group{&n->spec(), {}});
      g = &plan.groups.back();
    }
    g->members.push_back(n);
  }
  return plan;
}

std::vector<const IntegralNode*> reachable_integrals(const Node& root) {
  std::unordered_set<const Node*> seen;
  std::vector<const IntegralNode*> order;
  post_order(&root, seen, order);
  return order;
}

}  // namespace detail

struct PlanCache {
  std::once_flag once;
  detail::Plan plan;
};

BiField::BiField(std::shared_ptr<const detail::Node> node, Domain domain)
    : node_(std::move(node)), domain_(std::move(domain)), plan_(std::make_shared<PlanCache>()) {}

BiField BiField::from_functions(Signature sig, Domain domain, ValueFn value, JetFn jet) {
  return BiField(std::make_shared<detail::AnalyticNode>(sig, std::move(value), std::move(jet)),
                 std::move(domain));
}

BiField BiField::finite_difference(Signature sig, Domain domain, std::function<Binumber(Point)> fn,
                                   double h) {
  auto node = std::make_shared<detail::FdNode>(sig, std::move(fn), h, domain.punctures());
  return BiField(std::move(node), std::move(domain));
}

BiField BiField::constant(const Binumber& c, Domain domain) {
  return BiField(std::make_shared<detail::ConstNode>(c), std::move(domain));
}

Signature BiField::sig() const {
  require(valid(), "empty field");
  return node_->sig();
}

DerivMode BiField::deriv_mode() const {
  require(valid(), "empty field");
  return node_->finite_difference() ? DerivMode::FiniteDifference : DerivMode::Analytic;
}

BiField BiField::with_domain(Domain domain) const { return BiField(node_, std::move(domain)); }

const detail::Plan& BiField::plan() const {
  std::call_once(plan_->once, [this] { plan_->plan = detail::make_plan(*node_); });
  return plan_->plan;
}

void BiField::check_point(Point p) const {
  require(valid(), "empty field");
  if (!domain_.contains(p) ||
      domain_.distance_to_puncture(p) <= 1e-12 * (1.0 + std::fabs(p.x) + std::fabs(p.y))) {
    std::ostringstream os;
    os << "point (" << p.x << ", " << p.y << ") is outside " << domain_.description()
       << (domain_.contains(p) ? " (puncture)" : "");
    fail(ErrorKind::Domain, os.str());
  }
}

Binumber BiField::value(Point p, EvalMode mode) const { return jet(p, 0, mode).value(); }

Jet BiField::jet(Point p, int order, EvalMode mode) const {
  check_point(p);
  detail::EvalCtx ctx(p, mode);
  if (mode == EvalMode::Sweep) {
    for (const auto& g : plan().groups) {
      const auto vals = detail::sweep(g, p, mode);
      for (std::size_t i = 0; i < vals.size(); ++i) ctx.set_integral(g.members[i], vals[i]);
    }
  }
  return ctx.jet(*node_, order);
}

BiField operator+(const BiField& a, const BiField& b) { return detail::wrap_binary(detail::BinOp::Add, a, b); }
BiField operator-(const BiField& a, const BiField& b) { return detail::wrap_binary(detail::BinOp::Sub, a, b); }
BiField operator*(const BiField& a, const BiField& b) { return detail::wrap_binary(detail::BinOp::Mul, a, b); }
BiField operator/(const BiField& a, const BiField& b) { return detail::wrap_binary(detail::BinOp::Div, a, b); }
BiField operator-(const BiField& a) { return detail::wrap_unary(detail::UnOp::Neg, a); }

BiField operator+(const BiField& a, const Binumber& c) { return a + BiField::constant(c, a.domain()); }
BiField operator*(const BiField& a, const Binumber& c) { return a * BiField::constant(c, a.domain()); }
BiField operator*(const Binumber& c, const BiField& a) { return BiField::constant(c, a.domain()) * a; }
BiField operator+(const BiField& a, double c) { return a + Binumber::real(c, a.sig()); }
BiField operator-(const BiField& a, double c) { return a + Binumber::real(-c, a.sig()); }
BiField operator*(const BiField& a, double c) { return a * Binumber::real(c, a.sig()); }
BiField operator*(double c, const BiField& a) { return a * Binumber::real(c, a.sig()); }
BiField operator/(const BiField& a, double c) { return a * Binumber::real(1.0 / c, a.sig()); }
BiField operator/(double c, const BiField& a) { return inverse(a) * c; }

BiField conj(const BiField& a) { return detail::wrap_unary(detail::UnOp::Conj, a); }
BiField real_part(const BiField& a) { return detail::wrap_unary(detail::UnOp::Re, a); }
BiField imag_part(const BiField& a) { return detail::wrap_unary(detail::UnOp::Im, a); }
BiField imag_component(const BiField& a) { return detail::wrap_unary(detail::UnOp::ImComp, a); }
BiField times_unit(const BiField& a) { return detail::wrap_unary(detail::UnOp::TimesUnit, a); }
BiField inverse(const BiField& a) { return detail::wrap_unary(detail::UnOp::Inverse, a); }
BiField dz(const BiField& a) { return detail::wrap_unary(detail::UnOp::Dz, a); }
BiField dzbar(const BiField& a) { return detail::wrap_unary(detail::UnOp::Dzbar, a); }

BiField second_order_field(const BiField& a, SecondOrder which) {
  return detail::wrap_unary(which == SecondOrder::laplacian ? detail::UnOp::Laplacian : detail::UnOp::Box,
                            a);
}

BiField coordinate_x(Signature sig, Domain domain) {
  return BiField::analytic(sig, std::move(domain), [](auto x, auto) { return x; });
}

BiField coordinate_y(Signature sig, Domain domain) {
  return BiField::analytic(sig, std::move(domain), [](auto, auto y) { return y; });
}

Binumber wirtinger(const BiField& field, Wirtinger which, Point at) {
  const Jet j = field.jet(at, 1);
  return (which == Wirtinger::dz ? d_z(j) : d_zbar(j)).value();
}

double second_order(const BiField& field, SecondOrder which, Point at) {
  const Jet j = field.jet(at, 2);
  const double xx = 2.0 * j.at(2, 0).re, yy = 2.0 * j.at(0, 2).re;
  return which == SecondOrder::laplacian ? xx + yy : xx - yy;
}

}  // namespace pseudoanalytic
