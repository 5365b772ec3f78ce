#include "pseudoanalytic/schrodinger.hpp"

#include <cmath>
#include <sstream>

namespace pseudoanalytic {

SchrodingerContext make_context(const BiField& f, int probe) {
  require(f.valid(), "make_context: empty field");
  for (const Point& p : f.domain().sample_grid(probe)) {
    const Binumber v = f(p);
    if (!(v.re > 0.0) || std::fabs(v.im) > 1e-12 * std::fabs(v.re)) {
      std::ostringstream os;
      os << "f is not real and positive at (" << p.x << ", " << p.y << "): " << v;
      fail(ErrorKind::Positivity, os.str());
    }
  }
  SchrodingerContext ctx;
  ctx.sig = f.sig();
  ctx.domain = f.domain();
  ctx.f = real_part(f);
  const SecondOrder op = f.sig() == Signature::Elliptic ? SecondOrder::laplacian : SecondOrder::box;
  ctx.q = second_order_field(ctx.f, op) / ctx.f;
  const BiField fz = dz(ctx.f);
  ctx.q1 = real_part(fz * conj(fz)) * 8.0 / (ctx.f * ctx.f) - ctx.q;
  return ctx;
}

double schrodinger_residual(const BiField& q, const BiField& u, Point at) {
  const Jet j = u.jet(at, 2);
  const double xx = 2.0 * j.at(2, 0).re, yy = 2.0 * j.at(0, 2).re;
  const double L = u.sig() == Signature::Elliptic ? xx + yy : xx - yy;
  return std::fabs(-L + q(at).re * j.value().re);
}

}  // namespace pseudoanalytic
