#include "pseudoanalytic/bers.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

namespace pseudoanalytic {

namespace {

BiField denominator(const BiField& F, const BiField& G) { return F * conj(G) - conj(F) * G; }

void check_generating(const BiField& F, const BiField& G, int probe) {
  if (probe <= 0) return;
  for (const Point& p : F.domain().sample_grid(probe)) {
    const double im = (conj(F(p)) * G(p)).im;
    if (!(im > 0.0)) {
      std::ostringstream os;
      os << "Im(conj(F) G) = " << im << " at (" << p.x << ", " << p.y << ")";
      fail(ErrorKind::NotGeneratingPair, os.str());
    }
  }
}

}  // namespace

GeneratingPair GeneratingPair::make(BiField F, BiField G, int probe) {
  require(F.valid() && G.valid(), "GeneratingPair: empty field");
  require(F.sig() == G.sig(), "GeneratingPair: signature mismatch");
  check_generating(F, G, probe);
  GeneratingPair p;
  const BiField den = denominator(F, G);
  const BiField Fb = conj(F), Gb = conj(G);
  const BiField Fzb = dzbar(F), Gzb = dzbar(G), Fz = dz(F), Gz = dz(G);
  p.a = -1.0 * (Fb * Gzb - Fzb * Gb) / den;
  p.b = (F * Gzb - Fzb * G) / den;
  p.A = -1.0 * (Fb * Gz - Fz * Gb) / den;
  p.B = (F * Gz - Fz * G) / den;
  p.Fstar = -2.0 * Fb / den;
  p.Gstar = 2.0 * Gb / den;
  p.F = std::move(F);
  p.G = std::move(G);
  return p;
}

CharCoeffs char_coeffs(const GeneratingPair& pair, Point at) {
  const Binumber F = pair.F(at), G = pair.G(at);
  const Binumber den = F * conj(G) - conj(F) * G;
  if (is_null_cone(den, 1e-14) || norm(den) < 1e-14 * norm(F) * norm(G)) {
    std::ostringstream os;
    os << "degenerate pair at (" << at.x << ", " << at.y << ")";
    fail(ErrorKind::DegeneratePair, os.str());
  }
  return {pair.a(at), pair.b(at), pair.A(at), pair.B(at)};
}

GeneratingPair adjoint(const GeneratingPair& pair) {
  return GeneratingPair::make(pair.Fstar, pair.Gstar, 0);
}

double pair_residual(const GeneratingPair& pair, const BiField& W, Point at) {
  const Jet j = W.jet(at, 1);
  const Binumber w = j.value();
  return norm(d_zbar(j).value() - pair.a(at) * w - pair.b(at) * conj(w));
}

BiField fg_derivative(const GeneratingPair& pair, const BiField& W) {
  return dz(W) - pair.A * W - pair.B * conj(W);
}

Binumber fg_derivative(const GeneratingPair& pair, const BiField& W, Point at) {
  const Jet j = W.jet(at, 1);
  const Binumber w = j.value();
  return d_z(j).value() - pair.A(at) * w - pair.B(at) * conj(w);
}

Binumber fg_integral(const GeneratingPair& pair, const BiField& W, const Path& path) {
  const Point z1 = path.end();
  const double ig = integrate_along(FormKind::RealLine, pair.Gstar * W, path, 0.0);
  const double if_ = integrate_along(FormKind::RealLine, pair.Fstar * W, path, 0.0);
  return pair.F(z1) * ig + pair.G(z1) * if_;
}

BiField fg_antiderivative(const GeneratingPair& pair, const BiField& W, Point z0,
                          const PathPolicy& policy, const QuadratureCfg& quad) {
  const Domain dom = pair.domain().intersect(W.domain());
  const IntegralSpec spec{z0, policy, quad, dom.punctures()};
  const BiField ig = integral_field(FormKind::RealLine, pair.Gstar * W, spec, 0.0, dom);
  const BiField if_ = integral_field(FormKind::RealLine, pair.Fstar * W, spec, 0.0, dom);
  return (pair.F * ig + pair.G * if_).with_domain(dom);
}

GeneratingSequence::GeneratingSequence(std::vector<GeneratingPair> pairs,
                                       std::optional<int> period_start)
    : pairs_(std::move(pairs)), period_start_(period_start) {
  require(!pairs_.empty(), "GeneratingSequence: no pairs");
  require(!period_start_ || (*period_start_ >= 0 && *period_start_ < size()),
          "GeneratingSequence: period start out of range");
}

GeneratingSequence GeneratingSequence::constant(GeneratingPair pair) {
  return GeneratingSequence({std::move(pair)}, 0);
}

bool GeneratingSequence::has(int m) const {
  if (m >= 0 && m < size()) return true;
  if (!period_start_) return false;
  return m >= 0 || *period_start_ == 0;
}

const GeneratingPair& GeneratingSequence::pair(int m) const {
  if (!has(m)) {
    std::ostringstream os;
    os << "generating sequence has no pair with index " << m;
    fail(ErrorKind::SequenceExhausted, os.str());
  }
  if (m >= 0 && m < size()) return pairs_[static_cast<std::size_t>(m)];
  const int p = *period_start_, period = size() - p;
  const int k = ((m - p) % period + period) % period;
  return pairs_[static_cast<std::size_t>(p + k)];
}

FormalPower formal_power_zero(const GeneratingPair& pair, const Binumber& a, Point z0,
                              int pair_index) {
  require(a.sig == pair.sig(), "formal_power_zero: signature mismatch");
  const Binumber F = pair.F(z0), G = pair.G(z0);
  const double det = F.re * G.im - G.re * F.im;
  const double scale = norm(F) * norm(G);
  if (!(std::fabs(det) > 1e-12 * scale)) {
    std::ostringstream os;
    os << "F(z0), G(z0) are linearly dependent at (" << z0.x << ", " << z0.y << ")";
    fail(ErrorKind::DegeneratePair, os.str());
  }
  const double lambda = (a.re * G.im - G.re * a.im) / det;
  const double mu = (F.re * a.im - a.re * F.im) / det;
  return {0, z0, a, pair.F * lambda + pair.G * mu, pair_index};
}

FormalPower formal_power_next(const GeneratingSequence& seq, const FormalPower& prev,
                              const RecursionCfg& cfg) {
  const int m = prev.pair_index - 1;
  const GeneratingPair& pair = seq.pair(m);
  const int n = prev.order + 1;
  require(n >= 1, "formal_power_next: previous power must have order >= 0");
  BiField v = fg_antiderivative(pair, prev.value, prev.center, cfg.policy, cfg.quad);
  return {n, prev.center, prev.coeff, v * static_cast<double>(n), m};
}

FormalPower formal_power(const GeneratingSequence& seq, int n, const Binumber& a, Point z0, int m,
                         const RecursionCfg& cfg) {
  require(n >= 0, "formal_power: order must be non-negative");
  FormalPower z = formal_power_zero(seq.pair(m + n), a, z0, m + n);
  for (int k = 1; k <= n; ++k) z = formal_power_next(seq, z, cfg);
  return z;
}

GeneratingPair successor_from_powers(const GeneratingPair& pair, const FormalPower& Z1_1,
                                     const FormalPower& Z1_i, int probe) {
  require(Z1_1.order == 1 && Z1_i.order == 1, "successor_from_powers: first powers expected");
  const Binumber one = Binumber::real(1.0, pair.sig()), e = Binumber::unit(pair.sig());
  require(norm(Z1_1.coeff - one) < 1e-14 && norm(Z1_i.coeff - e) < 1e-14,
          "successor_from_powers: coefficients must be 1 and the imaginary unit");
  return GeneratingPair::make(fg_derivative(pair, Z1_1.value), fg_derivative(pair, Z1_i.value),
                              probe);
}

BiField higher_derivative(const GeneratingSequence& seq, const BiField& W, int m) {
  require(m >= 0, "higher_derivative: m must be non-negative");
  BiField w = W;
  for (int k = 0; k < m; ++k) w = fg_derivative(seq.pair(k), w);
  return w;
}

FitResult formal_polynomial_fit(const std::vector<FormalPower>& powers, const BiField& target,
                                const std::vector<Point>& samples) {
  const Eigen::Index rows = 2 * static_cast<Eigen::Index>(samples.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(powers.size());
  if (cols == 0 || rows < cols) fail(ErrorKind::Fit, "formal_polynomial_fit: too few samples");
  Eigen::MatrixXd M(rows, cols);
  Eigen::VectorXd t(rows);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Eigen::Index r = 2 * static_cast<Eigen::Index>(i);
    const Binumber v = target(samples[i]);
    t(r) = v.re;
    t(r + 1) = v.im;
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Binumber z = powers[static_cast<std::size_t>(k)].value(samples[i]);
      M(r, k) = z.re;
      M(r + 1, k) = z.im;
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  qr.setThreshold(1e-12);
  if (qr.rank() < cols) fail(ErrorKind::Fit, "formal_polynomial_fit: rank-deficient basis");
  const Eigen::VectorXd c = qr.solve(t);
  FitResult out;
  out.coeffs.assign(c.data(), c.data() + c.size());
  out.residual = (M * c - t).norm();
  return out;
}

std::vector<FormalPower> negative_power_ladder(const GeneratingSequence& seq,
                                               const FormalPower& Zm1, int N) {
  require(Zm1.order == -1, "negative_power_ladder: order -1 power expected");
  if (!seq.periodic())
    fail(ErrorKind::SequenceExhausted, "negative_power_ladder: periodic sequence required");
  std::vector<FormalPower> out;
  FormalPower z = Zm1;
  for (int n = 1; n < N; ++n) {
    const int m = z.pair_index;
    BiField v = fg_derivative(seq.pair(m), z.value) * (-1.0 / n);
    z = {-(n + 1), z.center, z.coeff, v, m + 1};
    out.push_back(z);
  }
  return out;
}

}  // namespace pseudoanalytic
