#pragma once

#include "pseudoanalytic/field.hpp"

namespace pseudoanalytic {

/// Positive solution f of (-Delta + q) f = 0 (elliptic) or (-Box + q) f = 0
/// (hyperbolic), with the derived potentials.
struct SchrodingerContext {
  BiField f;
  BiField q;   ///< Delta f / f, or Box f / f
  BiField q1;  ///< 8 f_z conj(f_z) / f^2 - q; elliptic: 2|grad f|^2/f^2 - q
  Signature sig = Signature::Elliptic;
  Domain domain;
};

/// Builds the context; f must be real and positive on a probe grid of its
/// domain (PositivityError otherwise).
SchrodingerContext make_context(const BiField& f, int probe = 20);

/// |(-L + q) u| at a point, L the Laplacian or wave operator of the signature.
double schrodinger_residual(const BiField& q, const BiField& u, Point at);

}  // namespace pseudoanalytic
