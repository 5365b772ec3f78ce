#include <cmath>
#include <sstream>

#include "node.hpp"
#include "pseudoanalytic/error.hpp"

namespace pseudoanalytic {

bool operator==(const IntegralSpec& a, const IntegralSpec& b) {
  return a.base == b.base && a.policy == b.policy && a.quad == b.quad && a.punctures == b.punctures;
}

namespace detail {

IntegralNode::IntegralNode(FormKind kind, NodePtr integrand, IntegralSpec spec, double c)
    : Node(integrand->sig(), integrand->finite_difference()),
      kind_(kind),
      integrand_(std::move(integrand)),
      spec_(std::move(spec)),
      c_(c) {
  spec_.quad.validate();
}

double IntegralNode::form(const Binumber& h, Point d) const {
  const double s = sigma(sig());
  if (kind_ == FormKind::RealLine) return h.re * d.x + s * h.im * d.y;
  return 2.0 * (h.re * d.x - s * h.im * d.y);
}

const Group& IntegralNode::own_group() const {
  std::call_once(group_once_, [this] {
    group_.spec = &spec_;
    for (const IntegralNode* n : reachable_integrals(*integrand_))
      if (n->spec() == spec_) group_.members.push_back(n);
    group_.members.push_back(this);
  });
  return group_;
}

Binumber IntegralNode::value(EvalCtx& ctx) const {
  if (const double* v = ctx.integral(this)) return Binumber::real(*v, sig());
  std::vector<double> vals;
  if (ctx.mode() == EvalMode::Nested) {
    Group g{&spec_, {this}};
    vals = sweep(g, ctx.point(), ctx.mode());
    ctx.set_integral(this, vals.back());
  } else {
    const Group& g = own_group();
    vals = sweep(g, ctx.point(), ctx.mode());
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (!ctx.integral(g.members[i])) ctx.set_integral(g.members[i], vals[i]);
  }
  return Binumber::real(vals.back(), sig());
}

Jet IntegralNode::jet(EvalCtx& ctx, int order) const {
  Jet r(sig(), order);
  r[0] = value(ctx);
  if (order == 0) return r;
  const Jet h = ctx.jet(*integrand_, order - 1);
  const double s = sigma(sig());
  const double fp = kind_ == FormKind::RealLine ? 1.0 : 2.0;
  const double fq = kind_ == FormKind::RealLine ? s : -2.0 * s;
  for (int d = 1; d <= order; ++d)
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      if (a >= 1)
        r.at(a, b).re = fp * h.at(a - 1, b).re / a;
      else
        r.at(0, b).re = fq * h.at(0, b - 1).im / b;
    }
  return r;
}

namespace {

struct PanelOut {
  std::vector<double> end;
  std::vector<double> mass;
};

class Sweeper {
 public:
  Sweeper(const Group& g, EvalMode mode)
      : g_(g), mode_(mode), rule_(panel_rule(g.spec->quad)), cfg_(g.spec->quad) {}

  void leg(Point A, Point B, std::vector<double>& state) {
    const Point d = B - A;
    subdivide(A, d, 0.0, 1.0, state, 0, nullptr);
  }

 private:
  PanelOut panel(Point A, Point d, double ta, double tb, const std::vector<double>& s0) const {
    const int n = rule_.size();
    const std::size_t m = g_.members.size();
    const double half = 0.5 * (tb - ta);
    std::vector<EvalCtx> ctxs;
    ctxs.reserve(n);
    for (int j = 0; j < n; ++j) {
      const double t = ta + half * (1.0 + rule_.nodes[j]);
      ctxs.emplace_back(A + t * d, mode_);
    }
    PanelOut out{std::vector<double>(m), std::vector<double>(m)};
    std::vector<double> form(n);
    for (std::size_t k = 0; k < m; ++k) {
      const IntegralNode* node = g_.members[k];
      for (int j = 0; j < n; ++j) {
        form[j] = node->form(ctxs[j].value(node->integrand()), d);
        if (!std::isfinite(form[j])) {
          std::ostringstream os;
          os << "non-finite integrand at (" << ctxs[j].point().x << ", " << ctxs[j].point().y << ")";
          fail(ErrorKind::Quadrature, os.str());
        }
      }
      double e = s0[k], mass = 0.0;
      for (int j = 0; j < n; ++j) {
        const double c = half * rule_.weights[j] * form[j];
        e += c;
        mass += std::fabs(c);
      }
      out.end[k] = e;
      out.mass[k] = mass;
      if (k + 1 < m) {
        for (int i = 0; i < n; ++i) {
          double v = 0.0;
          for (int j = 0; j < n; ++j) v += rule_.S(i, j) * form[j];
          ctxs[i].set_integral(node, s0[k] + half * v);
        }
      }
    }
    return out;
  }

  void subdivide(Point A, Point d, double ta, double tb, std::vector<double>& state, int depth,
                 const PanelOut* hint) {
    const PanelOut coarse = hint ? *hint : panel(A, d, ta, tb, state);
    const double tm = 0.5 * (ta + tb);
    const PanelOut left = panel(A, d, ta, tm, state);
    const PanelOut right = panel(A, d, tm, tb, left.end);
    bool ok = true;
    for (std::size_t k = 0; k < state.size() && ok; ++k) {
      const double err = std::fabs(right.end[k] - coarse.end[k]);
      const double scale = std::fabs(right.end[k]) + left.mass[k] + right.mass[k];
      ok = err <= cfg_.rel_tol * scale;
    }
    if (ok) {
      state = right.end;
      return;
    }
    if (depth >= cfg_.max_subdiv) {
      std::ostringstream os;
      os << "adaptive quadrature did not converge near (" << (A + tm * d).x << ", " << (A + tm * d).y
         << ") after " << cfg_.max_subdiv << " subdivisions";
      fail(ErrorKind::Quadrature, os.str());
    }
    subdivide(A, d, ta, tm, state, depth + 1, &left);
    subdivide(A, d, tm, tb, state, depth + 1, nullptr);
  }

  const Group& g_;
  EvalMode mode_;
  const PanelRule& rule_;
  QuadratureCfg cfg_;
};

}  // namespace

std::vector<double> sweep_polyline(const Group& group, const std::vector<Point>& vertices,
                                   EvalMode mode) {
  std::vector<double> state;
  state.reserve(group.members.size());
  for (const IntegralNode* n : group.members) state.push_back(n->constant());
  Sweeper sw(group, mode);
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (!(vertices[i - 1] == vertices[i])) sw.leg(vertices[i - 1], vertices[i], state);
  return state;
}

std::vector<double> sweep(const Group& group, Point end, EvalMode mode) {
  const IntegralSpec& s = *group.spec;
  return sweep_polyline(group, route(s.policy, s.base, end, s.punctures), mode);
}

}  // namespace detail

BiField integral_field(FormKind kind, const BiField& integrand, const IntegralSpec& spec, double c,
                       Domain domain) {
  require(integrand.valid(), "integral_field: empty integrand");
  auto node = std::make_shared<detail::IntegralNode>(kind, integrand.node(), spec, c);
  return BiField(std::move(node), std::move(domain));
}

double integrate_along(FormKind kind, const BiField& integrand, const Path& path, double c,
                       EvalMode mode) {
  require(path.vertices.size() >= 2, "integrate_along: path needs two vertices");
  IntegralSpec spec;
  spec.base = path.vertices.front();
  spec.policy = PathPolicy::polyline(
      std::vector<Point>(path.vertices.begin() + 1, path.vertices.end() - 1));
  spec.quad = path.quad;
  spec.punctures = integrand.domain().punctures();
  const BiField f = integral_field(kind, integrand, spec, c, integrand.domain());
  return f.value(path.vertices.back(), mode).re;
}

}  // namespace pseudoanalytic
