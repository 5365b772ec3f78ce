#pragma once

#include <optional>
#include <vector>

#include "pseudoanalytic/field.hpp"
#include "pseudoanalytic/line_integral.hpp"
#include "pseudoanalytic/quadrature.hpp"

namespace pseudoanalytic {

/// Generating pair (F, G) with its characteristic coefficients and adjoint
/// pair, all as fields.  With den = F conj(G) - conj(F) G:
///   a = -(conj(F) G_zbar - F_zbar conj(G)) / den,  b = (F G_zbar - F_zbar G) / den,
///   A = -(conj(F) G_z - F_z conj(G)) / den,        B = (F G_z - F_z G) / den,
///   F* = -2 conj(F) / den,                         G* = 2 conj(G) / den.
struct GeneratingPair {
  BiField F, G;
  BiField a, b, A, B;
  BiField Fstar, Gstar;

  /// Builds the pair; with `probe` > 0 checks Im(conj(F) G) > 0 on a
  /// probe x probe grid of the domain (NotGeneratingPair otherwise).
  static GeneratingPair make(BiField F, BiField G, int probe = 8);
  Signature sig() const { return F.sig(); }
  const Domain& domain() const { return F.domain(); }
};

struct CharCoeffs {
  Binumber a, b, A, B;
};

/// Characteristic coefficients at a point; DegeneratePair when F conj(G) -
/// conj(F) G vanishes there.
CharCoeffs char_coeffs(const GeneratingPair& pair, Point at);

/// Adjoint pair (F*, G*).  The adjoint of the adjoint is the pair itself.
GeneratingPair adjoint(const GeneratingPair& pair);

/// |W_zbar - a W - b conj(W)| for the pair's Vekua equation.
double pair_residual(const GeneratingPair& pair, const BiField& W, Point at);

/// (F,G)-derivative W_z - A W - B conj(W) as a field and at a point.
BiField fg_derivative(const GeneratingPair& pair, const BiField& W);
Binumber fg_derivative(const GeneratingPair& pair, const BiField& W, Point at);

/// (F,G)-integral along a path ending at z1:
///   F(z1) Re int G* W dz + G(z1) Re int F* W dz.
Binumber fg_integral(const GeneratingPair& pair, const BiField& W, const Path& path);

/// z -> F(z) Re int_{z0}^{z} G* W dz + G(z) Re int_{z0}^{z} F* W dz.
BiField fg_antiderivative(const GeneratingPair& pair, const BiField& W, Point z0,
                          const PathPolicy& policy = {}, const QuadratureCfg& quad = {});

/// Pairs (F_m, G_m), m = 0..size-1.  With period_start p the pairs from index
/// p on repeat; period_start 0 also extends the sequence to negative m.
class GeneratingSequence {
 public:
  explicit GeneratingSequence(std::vector<GeneratingPair> pairs,
                              std::optional<int> period_start = std::nullopt);
  /// The sequence in which every pair equals `pair`.
  static GeneratingSequence constant(GeneratingPair pair);

  /// SequenceExhausted when m lies outside the known or periodic range.
  const GeneratingPair& pair(int m) const;
  bool has(int m) const;
  bool periodic() const { return period_start_.has_value(); }
  int size() const { return static_cast<int>(pairs_.size()); }

 private:
  std::vector<GeneratingPair> pairs_;
  std::optional<int> period_start_;
};

struct FormalPower {
  int order = 0;
  Point center{};
  Binumber coeff{};
  BiField value;
  int pair_index = 0;
};

struct RecursionCfg {
  PathPolicy policy;
  QuadratureCfg quad;
};

/// lambda F + mu G with real lambda, mu solving lambda F(z0) + mu G(z0) = a.
FormalPower formal_power_zero(const GeneratingPair& pair, const Binumber& a, Point z0,
                              int pair_index = 0);

/// Z_m^(n) = n * (F_m,G_m)-integral from z0 of Z_{m+1}^(n-1), given prev =
/// Z_{m+1}^(n-1).
FormalPower formal_power_next(const GeneratingSequence& seq, const FormalPower& prev,
                              const RecursionCfg& cfg = {});

/// Z_m^(n)(a, z0; .) by the recursion, n >= 0.
FormalPower formal_power(const GeneratingSequence& seq, int n, const Binumber& a, Point z0,
                         int m = 0, const RecursionCfg& cfg = {});

/// (F', G') = ((F,G)-derivatives of the first formal powers with coefficients
/// 1 and the imaginary unit); checked on a probe grid (NotGeneratingPair).
GeneratingPair successor_from_powers(const GeneratingPair& pair, const FormalPower& Z1_1,
                                     const FormalPower& Z1_i, int probe = 8);

/// W^[0] = W, W^[k+1] = (F_k,G_k)-derivative of W^[k].
BiField higher_derivative(const GeneratingSequence& seq, const BiField& W, int m);

struct FitResult {
  std::vector<double> coeffs;  ///< one real coefficient per basis entry
  double residual = 0.0;       ///< Euclidean norm of the sample misfit
};

/// Least squares over real coefficients of sum_k c_k Z_k(z) ~ target(z) at the
/// samples; FitError on a rank-deficient system.
FitResult formal_polynomial_fit(const std::vector<FormalPower>& powers, const BiField& target,
                                const std::vector<Point>& samples);

/// Z^(-n), n = 2..N, from Z^(-1) by Z_{m+1}^(-n-1) = -(1/n) (F_m,G_m)-derivative
/// of Z_m^(-n).  Needs a periodic sequence (SequenceExhausted otherwise).
std::vector<FormalPower> negative_power_ladder(const GeneratingSequence& seq,
                                               const FormalPower& Zm1, int N);

}  // namespace pseudoanalytic
