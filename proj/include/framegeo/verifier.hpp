#ifndef FRAMEGEO_VERIFIER_HPP
#define FRAMEGEO_VERIFIER_HPP

#include "framegeo/checks.hpp"
#include "framegeo/geometry.hpp"
#include "framegeo/manifold.hpp"

namespace framegeo {

/// The two defining Kenmotsu identities, checked on all frame slots:
///   (nabla_X phi)Y = -g(X, phi Y) xi - eta(Y) phi X
///   nabla_X xi = X - eta(X) xi
/// Records "nabla-phi" and "nabla-xi".
VerificationReport verify_kenmotsu(const FrameManifoldSpec& spec,
                                   const ConnectionCoefficients& gamma);

/// The seven identities that hold on every Kenmotsu manifold, checked
/// exhaustively on frame slots (records in this order):
///   eta-of-curvature        eta(R(X,Y)Z) = g(X,Z)eta(Y) - g(Y,Z)eta(X)
///   curvature-xi-argument   R(X,Y)xi = eta(X)Y - eta(Y)X
///   curvature-xi-direction  R(X,xi)Y = g(X,Y)xi - eta(Y)X
///   ricci-xi                S(X,xi) = -2n eta(X)          (dim = 2n+1)
///   ricci-phi-invariance    S(phi X, phi Y) = S(X,Y) + 2n eta(X)eta(Y)
///   nabla-eta               (nabla_X eta)Y = g(X,Y) - eta(X)eta(Y)
///   lie-xi-metric           (lie_xi g)(X,Y) = 2[g(X,Y) - eta(X)eta(Y)]
/// These presuppose the Kenmotsu identities; callers pass force=true to
/// evaluate them on a non-Kenmotsu spec (useful as a negative control),
/// otherwise the records come back Skipped.
VerificationReport verify_derived_identities(const FrameManifoldSpec& spec,
                                             const CurvaturePackage& curvature,
                                             const DerivativePackage& derivatives,
                                             bool kenmotsu_holds, bool force = false);

} // namespace framegeo

#endif
