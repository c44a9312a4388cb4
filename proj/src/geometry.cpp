#include "framegeo/geometry.hpp"

#include "framegeo/errors.hpp"
#include "framegeo/linalg.hpp"

namespace framegeo {

namespace {

Rational metric_pairing(const Bilinear02& g, int i, const FrameVector& v) {
  Rational s;
  for (int m = 0; m < g.dim(); ++m) s += g.at(i, m) * v[m];
  return s;
}

} // namespace

ConnectionCoefficients koszul_connection(const Bilinear02& g, const StructureConstants& c) {
  const int n = g.dim();
  const RationalMatrix ginv = inverse(RationalMatrix::from_bilinear(g));
  const Rational half(1, 2);

  ConnectionCoefficients gamma(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // lowered[k] = g(nabla_{e_i} e_j, e_k)
      FrameVector lowered(n);
      for (int k = 0; k < n; ++k) {
        lowered[k] = half * (-metric_pairing(g, i, c.bracket(j, k)) -
                             metric_pairing(g, j, c.bracket(i, k)) +
                             metric_pairing(g, k, c.bracket(i, j)));
      }
      for (int l = 0; l < n; ++l) {
        Rational v;
        for (int k = 0; k < n; ++k) v += ginv.at(l, k) * lowered[k];
        gamma.coeff(i, j, l) = v;
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (gamma.coeff(i, j, k) - gamma.coeff(j, i, k) != c.coeff(i, j, k)) {
          throw EngineError("koszul_connection: torsion-free identity violated");
        }
        Rational compat;
        for (int l = 0; l < n; ++l) {
          compat += gamma.coeff(i, j, l) * g.at(l, k) + gamma.coeff(i, k, l) * g.at(j, l);
        }
        if (!compat.is_zero()) {
          throw EngineError("koszul_connection: metric compatibility violated");
        }
      }
    }
  }
  return gamma;
}

Tensor13 riemann_tensor(const StructureConstants& c, const ConnectionCoefficients& gamma) {
  const int n = gamma.dim();
  Tensor13 riemann(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Rational v;
          for (int m = 0; m < n; ++m) {
            v += gamma.coeff(j, k, m) * gamma.coeff(i, m, l);
            v -= gamma.coeff(i, k, m) * gamma.coeff(j, m, l);
            v -= c.coeff(i, j, m) * gamma.coeff(m, k, l);
          }
          riemann.comp(l, i, j, k) = v;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (riemann.comp(l, i, j, k) != -riemann.comp(l, j, i, k)) {
            throw EngineError("riemann_tensor: antisymmetry in (X,Y) violated");
          }
  return riemann;
}

std::pair<Bilinear02, Rational> ricci_and_scalar(const Bilinear02& g, const Tensor13& riemann) {
  const int n = g.dim();
  const RationalMatrix ginv = inverse(RationalMatrix::from_bilinear(g));

  Bilinear02 ricci(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Rational s;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          Rational lowered; // g(R(e_a, e_j) e_k, e_b)
          for (int l = 0; l < n; ++l) lowered += riemann.comp(l, a, j, k) * g.at(l, b);
          s += ginv.at(a, b) * lowered;
        }
      }
      ricci.at(j, k) = s;
    }
  }
  if (!ricci.is_symmetric()) {
    throw EngineError("ricci_and_scalar: Ricci tensor not symmetric");
  }
  Rational scalar;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) scalar += ginv.at(a, b) * ricci.at(a, b);
  return {ricci, scalar};
}

CurvaturePackage curvature_package(const Bilinear02& g, const StructureConstants& c,
                                   const ConnectionCoefficients& gamma) {
  const int n = g.dim();
  CurvaturePackage pkg;
  pkg.riemann = riemann_tensor(c, gamma);
  std::tie(pkg.ricci, pkg.scalar) = ricci_and_scalar(g, pkg.riemann);

  // Lowered tensor R_{ijkl} = g(R(e_i,e_j)e_k, e_l).
  auto lowered = [&](int i, int j, int k, int l) {
    Rational v;
    for (int m = 0; m < n; ++m) v += pkg.riemann.comp(m, i, j, k) * g.at(m, l);
    return v;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          if (lowered(i, j, k, l) != -lowered(i, j, l, k)) {
            throw EngineError("curvature: antisymmetry in (Z,W) violated");
          }
          if (lowered(i, j, k, l) != lowered(k, l, i, j)) {
            throw EngineError("curvature: pair symmetry violated");
          }
        }
        for (int l = 0; l < n; ++l) {
          // one component of R(X,Y)Z + R(Y,Z)X + R(Z,X)Y
          const Rational sum = pkg.riemann.comp(l, i, j, k) + pkg.riemann.comp(l, j, k, i) +
                               pkg.riemann.comp(l, k, i, j);
          if (!sum.is_zero()) throw EngineError("curvature: first Bianchi identity violated");
        }
      }
    }
  }
  return pkg;
}

Tensor03 covariant_derivative_bilinear(const ConnectionCoefficients& gamma,
                                       const Bilinear02& t) {
  const int n = gamma.dim();
  Tensor03 d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational v;
        for (int m = 0; m < n; ++m) {
          v -= gamma.coeff(i, j, m) * t.at(m, k);
          v -= gamma.coeff(i, k, m) * t.at(j, m);
        }
        d.at(i, j, k) = v;
      }
  return d;
}

Bilinear02 covariant_derivative_oneform(const ConnectionCoefficients& gamma,
                                        const OneForm& w) {
  const int n = gamma.dim();
  Bilinear02 d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v;
      for (int m = 0; m < n; ++m) v -= gamma.coeff(i, j, m) * w[m];
      d.at(i, j) = v;
    }
  return d;
}

Tensor03 covariant_derivative_phi(const ConnectionCoefficients& gamma,
                                  const Endomorphism11& phi) {
  const int n = gamma.dim();
  Tensor03 d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational v;
        for (int m = 0; m < n; ++m) {
          v += gamma.coeff(i, m, k) * phi.at(m, j);
          v -= gamma.coeff(i, j, m) * phi.at(k, m);
        }
        d.at(i, j, k) = v;
      }
  return d;
}

Endomorphism11 covariant_derivative_xi(const ConnectionCoefficients& gamma,
                                       const FrameVector& xi) {
  const int n = gamma.dim();
  Endomorphism11 d(n);
  for (int i = 0; i < n; ++i) {
    const FrameVector v = gamma.derivative_of(i, xi);
    for (int k = 0; k < n; ++k) d.at(k, i) = v[k];
  }
  return d;
}

Bilinear02 lie_derivative_metric(const Bilinear02& g, const ConnectionCoefficients& gamma,
                                 const FrameVector& xi) {
  const int n = g.dim();
  Bilinear02 lie(n);
  for (int i = 0; i < n; ++i) {
    const FrameVector di = gamma.derivative_of(i, xi);
    for (int j = 0; j < n; ++j) {
      const FrameVector dj = gamma.derivative_of(j, xi);
      lie.at(i, j) = metric_pairing(g, j, di) + metric_pairing(g, i, dj);
    }
  }
  if (!lie.is_symmetric()) {
    throw EngineError("lie_derivative_metric: output not symmetric");
  }
  return lie;
}

Bilinear02 exterior_derivative_eta(const Bilinear02& nabla_eta) {
  const int n = nabla_eta.dim();
  const Rational half(1, 2);
  Bilinear02 d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.at(i, j) = half * (nabla_eta.at(i, j) - nabla_eta.at(j, i));
  return d;
}

DerivativePackage derivative_package(const FrameManifoldSpec& spec,
                                     const ConnectionCoefficients& gamma,
                                     const Bilinear02& ricci) {
  DerivativePackage d;
  d.nabla_ricci = covariant_derivative_bilinear(gamma, ricci);
  d.nabla_eta = covariant_derivative_oneform(gamma, spec.eta);
  d.nabla_phi = covariant_derivative_phi(gamma, spec.phi);
  d.lie_xi_metric = lie_derivative_metric(spec.metric, gamma, spec.xi);
  d.d_eta = exterior_derivative_eta(d.nabla_eta);
  return d;
}

} // namespace framegeo
