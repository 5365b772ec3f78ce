#include "pseudoanalytic/antigradient.hpp"

#include <cmath>
#include <sstream>

namespace pseudoanalytic {

double compatibility_residual(const BiField& Phi, Point at) {
  const Jet j = Phi.jet(at, 1);
  return std::fabs(j.at(0, 1).re + sigma(Phi.sig()) * j.at(1, 0).im);
}

void check_compatibility(const BiField& Phi, const std::vector<Point>& samples) {
  const double rel = Phi.deriv_mode() == DerivMode::Analytic ? 1e-6 : 1e-4;
  for (const Point& p : samples) {
    const Jet j = Phi.jet(p, 1);
    const double res = std::fabs(j.at(0, 1).re + sigma(Phi.sig()) * j.at(1, 0).im);
    const double scale = norm(j.at(1, 0)) + norm(j.at(0, 1)) + 1e-300;
    if (res > rel * scale && res > 1e-12) {
      std::ostringstream os;
      os << "compatibility residual " << res << " at (" << p.x << ", " << p.y << ")";
      fail(ErrorKind::NotConservative, os.str());
    }
  }
}

Path make_path(Point z0, Point z, const Domain& domain, const PathPolicy& policy,
               const QuadratureCfg& quad) {
  return Path{route(policy, z0, z, domain.punctures()), quad};
}

namespace {

std::vector<Point> path_samples(const Path& path, const Domain& domain) {
  std::vector<Point> out;
  for (std::size_t i = 1; i < path.vertices.size(); ++i)
    for (double t : {0.25, 0.5, 0.75}) {
      const Point p = path.vertices[i - 1] + t * (path.vertices[i] - path.vertices[i - 1]);
      if (domain.admits(p, 1e-9)) out.push_back(p);
    }
  return out;
}

double abar_impl(const BiField& Phi, Point z0, Point z, const Path& path, double c) {
  require(path.vertices.size() >= 2, "abar: path needs two vertices");
  require(path.start() == z0 && path.end() == z, "abar: path must run from z0 to z");
  check_compatibility(Phi, path_samples(path, Phi.domain()));
  return integrate_along(FormKind::Antigradient, Phi, path, c);
}

}  // namespace

double abar(const BiField& Phi, Point z0, Point z, const Path& path, double c) {
  require(Phi.sig() == Signature::Elliptic, "abar: elliptic field expected (use abar_h)");
  return abar_impl(Phi, z0, z, path, c);
}

double abar_h(const BiField& Phi, Point z0, Point z, const Path& path, double c) {
  require(Phi.sig() == Signature::Hyperbolic, "abar_h: hyperbolic field expected");
  return abar_impl(Phi, z0, z, path, c);
}

BiField antigradient_field(const BiField& Phi, Point z0, const PathPolicy& policy,
                           const QuadratureCfg& quad, double c) {
  IntegralSpec spec{z0, policy, quad, Phi.domain().punctures()};
  return integral_field(FormKind::Antigradient, Phi, spec, c, Phi.domain());
}

}  // namespace pseudoanalytic
