#ifndef FRAMEGEO_GEOMETRY_HPP
#define FRAMEGEO_GEOMETRY_HPP

#include "framegeo/manifold.hpp"
#include "framegeo/structure.hpp"
#include "framegeo/tensors.hpp"

namespace framegeo {

/// Levi-Civita connection coefficients on the frame:
/// coeff(i,j,k) is the e_k-component of nabla_{e_i} e_j.
class ConnectionCoefficients {
public:
  ConnectionCoefficients() = default;
  explicit ConnectionCoefficients(int n) : m_gamma(n) {}

  int dim() const { return m_gamma.dim(); }
  const Rational& coeff(int i, int j, int k) const { return m_gamma.at(i, j, k); }
  Rational& coeff(int i, int j, int k) { return m_gamma.at(i, j, k); }

  /// nabla_{e_i} e_j as a frame vector.
  FrameVector derivative(int i, int j) const {
    FrameVector v(dim());
    for (int k = 0; k < dim(); ++k) v[k] = coeff(i, j, k);
    return v;
  }

  /// nabla_{e_i} X for a constant-component vector field X.
  FrameVector derivative_of(int i, const FrameVector& x) const {
    FrameVector v(dim());
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k) v[k] += x[j] * coeff(i, j, k);
    return v;
  }

private:
  Tensor03 m_gamma;
};

struct CurvaturePackage {
  Tensor13 riemann;   // comp(l,i,j,k) = e_l-component of R(e_i,e_j)e_k
  Bilinear02 ricci;   // symmetric
  Rational scalar;    // r = sum G^{ab} ricci_ab
};

/// The derivative tensors consumed by the identity and soliton suites.
struct DerivativePackage {
  Tensor03 nabla_ricci;     // (i,j,k) = (nabla_{e_i} S)(e_j, e_k)
  Bilinear02 nabla_eta;     // (i,j)   = (nabla_{e_i} eta)(e_j)
  Tensor03 nabla_phi;       // (i,j,k) = e_k-component of (nabla_{e_i} phi)(e_j)
  Bilinear02 lie_xi_metric; // (lie_xi g)(e_i, e_j), symmetric
  Bilinear02 d_eta;         // antisymmetric
};

/// Levi-Civita connection from the reduced Koszul formula. All frame
/// metric coefficients are constant, so the derivative terms vanish and
///   2 g(nabla_{e_i} e_j, e_k) =
///     -g(e_i,[e_j,e_k]) - g(e_j,[e_i,e_k]) + g(e_k,[e_i,e_j]);
/// the coefficients follow by applying the exact metric inverse.
/// Torsion-freeness and metric compatibility are asserted before return;
/// a violation is an engine bug and throws EngineError.
ConnectionCoefficients koszul_connection(const Bilinear02& g, const StructureConstants& c);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z on
/// frame slots; constant coefficients leave only the quadratic and
/// bracket terms. Antisymmetry in (i,j) is asserted.
Tensor13 riemann_tensor(const StructureConstants& c, const ConnectionCoefficients& gamma);

/// Ricci contraction S(Y,Z) = sum_{a,b} G^{ab} g(R(e_a,Y)Z, e_b) and its
/// metric trace. The contraction sign is fixed by this formula.
std::pair<Bilinear02, Rational> ricci_and_scalar(const Bilinear02& g, const Tensor13& riemann);

/// Curvature bundle with the full invariant set asserted: antisymmetry in
/// (i,j) and (k,l) of the lowered tensor, pair symmetry, the first Bianchi
/// identity, and symmetry of the Ricci tensor.
CurvaturePackage curvature_package(const Bilinear02& g, const StructureConstants& c,
                                   const ConnectionCoefficients& gamma);

/// (nabla T)_{i,j,k} = -sum_m (Gamma^m_ij T_mk + Gamma^m_ik T_jm)
/// for a constant-component (0,2) tensor.
Tensor03 covariant_derivative_bilinear(const ConnectionCoefficients& gamma,
                                       const Bilinear02& t);

/// (nabla w)_{i,j} = -sum_m Gamma^m_ij w_m for a constant 1-form.
Bilinear02 covariant_derivative_oneform(const ConnectionCoefficients& gamma,
                                        const OneForm& w);

/// (nabla phi)_{i,j,k} = sum_m (Gamma^k_im phi^m_j - Gamma^m_ij phi^k_m).
Tensor03 covariant_derivative_phi(const ConnectionCoefficients& gamma,
                                  const Endomorphism11& phi);

/// nabla_{e_i} xi, columns indexed by the direction i: at(k,i) is the
/// e_k-component of nabla_{e_i} xi.
Endomorphism11 covariant_derivative_xi(const ConnectionCoefficients& gamma,
                                       const FrameVector& xi);

/// (lie_xi g)(X,Y) = g(nabla_X xi, Y) + g(X, nabla_Y xi).
Bilinear02 lie_derivative_metric(const Bilinear02& g, const ConnectionCoefficients& gamma,
                                 const FrameVector& xi);

/// d eta(X,Y) = [(nabla_X eta)Y - (nabla_Y eta)X] / 2.
Bilinear02 exterior_derivative_eta(const Bilinear02& nabla_eta);

/// All derivative tensors for a validated spec in one pass.
DerivativePackage derivative_package(const FrameManifoldSpec& spec,
                                     const ConnectionCoefficients& gamma,
                                     const Bilinear02& ricci);

} // namespace framegeo

#endif
