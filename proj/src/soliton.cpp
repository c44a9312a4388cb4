#include "framegeo/soliton.hpp"

#include "framegeo/errors.hpp"
#include "framegeo/linalg.hpp"

namespace framegeo {

namespace {

/// First frame index i with u = e_i - eta(e_i) xi nonzero. Such an i
/// always exists for dim >= 2; failing to find one is an engine bug.
std::pair<int, FrameVector> transverse_probe(const OneForm& eta, const FrameVector& xi) {
  const int n = eta.dim();
  for (int i = 0; i < n; ++i) {
    FrameVector u(n);
    for (int k = 0; k < n; ++k) {
      u[k] = (k == i ? Rational(1) : Rational(0)) - eta[i] * xi[k];
    }
    if (!u.is_zero()) return {i, u};
  }
  throw EngineError("no frame direction transverse to xi");
}

Rational scalar_relation_rhs(int dim, const Rational& conformal_term, const Rational& lambda,
                             const Rational& mu) {
  // 4n = 2 (dim - 1) for dim = 2n+1.
  return conformal_term - Rational(2 * (dim - 1)) + Rational(2) * lambda + Rational(2) * mu;
}

std::optional<std::pair<int, int>> first_nonzero_slot(const Bilinear02& t) {
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      if (!t.at(i, j).is_zero()) return std::pair{i, j};
  return std::nullopt;
}

} // namespace

std::string_view variant_name(SolitonVariant v) {
  switch (v) {
    case SolitonVariant::ConformalEtaEinstein: return "conformal-eta-einstein";
    case SolitonVariant::EtaEinstein: return "eta-einstein";
    case SolitonVariant::ConformalEinstein: return "conformal-einstein";
    case SolitonVariant::Einstein: return "einstein";
  }
  return "";
}

std::optional<SolitonVariant> variant_from_name(std::string_view name) {
  for (SolitonVariant v : {SolitonVariant::ConformalEtaEinstein, SolitonVariant::EtaEinstein,
                           SolitonVariant::ConformalEinstein, SolitonVariant::Einstein}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

std::string_view recurrence_name(RicciRecurrence r) {
  switch (r) {
    case RicciRecurrence::Recurrent: return "recurrent";
    case RicciRecurrence::ParallelNotRecurrent: return "parallel, not recurrent";
    case RicciRecurrence::NotRecurrent: return "not recurrent";
    case RicciRecurrence::Undefined: return "recurrence undefined (S = 0)";
  }
  return "";
}

Rational SolitonParameters::conformal_term(int dim) const {
  if (!variant_has_conformal_term(variant)) return Rational(0);
  if (!p) {
    throw SpecError("p", std::string("required for variant ") + std::string(variant_name(variant)));
  }
  return *p + Rational(2, dim);
}

Bilinear02 soliton_residual(const Bilinear02& g, const OneForm& eta, const Bilinear02& ricci,
                            const Rational& scalar, const Bilinear02& lie_xi_metric,
                            const SolitonParameters& params) {
  if (variant_forces_mu_zero(params.variant) && !params.mu.is_zero()) {
    throw SpecError("mu", std::string("variant ") + std::string(variant_name(params.variant)) +
                              " forces mu = 0");
  }
  const Rational bracket =
      Rational(2) * params.lambda - scalar + params.conformal_term(g.dim());
  Bilinear02 residual = lie_xi_metric;
  residual += Rational(2) * ricci;
  Bilinear02 gterm = g;
  gterm.scale(bracket);
  residual += gterm;
  Bilinear02 etaterm = outer(eta, eta);
  etaterm.scale(Rational(2) * params.mu);
  residual += etaterm;
  return residual;
}

SolitonSolveResult solve_soliton_constants(const Bilinear02& g, const OneForm& eta,
                                           const FrameVector& xi, const Bilinear02& ricci,
                                           const Rational& scalar,
                                           const Bilinear02& lie_xi_metric,
                                           std::optional<Rational> p, SolitonVariant variant) {
  const int n = g.dim();
  SolitonParameters params;
  params.p = std::move(p);
  params.variant = variant;
  const Rational cterm = params.conformal_term(n); // validates p for conformal variants

  // Unknown-free part: A = lie_xi g + 2S + (-r + cterm) g.
  Bilinear02 a = lie_xi_metric;
  a += Rational(2) * ricci;
  Bilinear02 gterm = g;
  gterm.scale(cterm - scalar);
  a += gterm;

  const auto [probe_index, u] = transverse_probe(eta, xi);
  (void)probe_index;
  params.lambda = -a.apply(u, u) / (Rational(2) * g.apply(u, u));
  params.mu = variant_forces_mu_zero(variant)
                  ? Rational(0)
                  : -(a.apply(xi, xi) + Rational(2) * params.lambda) / Rational(2);

  const Bilinear02 residual = soliton_residual(g, eta, ricci, scalar, lie_xi_metric, params);
  if (const auto slot = first_nonzero_slot(residual)) {
    return InfeasibilityCertificate{slot->first + 1, slot->second + 1,
                                    residual.at(slot->first, slot->second)};
  }

  SolitonSolution solution;
  solution.parameters = params;
  solution.residual = residual;
  solution.scalar_relation_holds =
      scalar == scalar_relation_rhs(n, cterm, params.lambda, params.mu);
  return solution;
}

EtaEinsteinDecomposition eta_einstein_decompose(const Bilinear02& ricci, const Bilinear02& g,
                                                const OneForm& eta) {
  const int n = g.dim();
  // Recover xi from eta: xi = G^{-1} eta, so the probe below matches the
  // solver's choice of u.
  const RationalMatrix ginv = inverse(RationalMatrix::from_bilinear(g));
  FrameVector xi(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) xi[a] += ginv.at(a, b) * eta[b];
  if (eta.apply(xi) != Rational(1)) {
    throw EngineError("eta_einstein_decompose: eta(xi) != 1");
  }

  const auto [probe_index, u] = transverse_probe(eta, xi);
  (void)probe_index;
  const Rational a = ricci.apply(u, u) / g.apply(u, u);
  const Rational b = ricci.apply(xi, xi) - a;

  Bilinear02 reconstruction = g;
  reconstruction.scale(a);
  Bilinear02 etaterm = outer(eta, eta);
  etaterm.scale(b);
  reconstruction += etaterm;

  EtaEinsteinDecomposition result;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (reconstruction.at(i, j) != ricci.at(i, j)) {
        result.witness = {i + 1, j + 1};
        return result;
      }
    }
  }
  result.coefficients = {a, b};
  return result;
}

bool check_scalar_relation(int dim, const Rational& p, const Rational& lambda,
                           const Rational& mu, const Rational& scalar) {
  return scalar == scalar_relation_rhs(dim, p + Rational(2, dim), lambda, mu);
}

ClassificationReport classify(const FrameManifoldSpec& spec,
                              const ConnectionCoefficients& gamma,
                              const CurvaturePackage& curvature,
                              const DerivativePackage& derivatives,
                              const SolitonSolution& solution) {
  const int n = spec.dimension;
  const auto& nabla_ricci = derivatives.nabla_ricci;
  const auto& ricci = curvature.ricci;
  const auto& eta = spec.eta;
  const auto& params = solution.parameters;
  const Rational cterm = params.conformal_term(n);
  const Rational four_n(2 * (n - 1));
  const Rational two = 2;

  ClassificationReport report;
  report.ricci_symmetric = nabla_ricci.is_zero();

  report.eta_recurrent = true;
  for (int i = 0; i < n && report.eta_recurrent; ++i)
    for (int j = 0; j < n && report.eta_recurrent; ++j)
      for (int k = 0; k < n; ++k) {
        if (nabla_ricci.at(i, j, k) != eta[i] * ricci.at(j, k)) {
          report.eta_recurrent = false;
          report.eta_recurrent_witness = {i + 1, j + 1, k + 1};
          break;
        }
      }

  report.cyclic_parallel = true;
  for (int i = 0; i < n && report.cyclic_parallel; ++i)
    for (int j = 0; j < n && report.cyclic_parallel; ++j)
      for (int k = 0; k < n; ++k) {
        const Rational sum =
            nabla_ricci.at(i, j, k) + nabla_ricci.at(j, k, i) + nabla_ricci.at(k, i, j);
        if (!sum.is_zero()) {
          report.cyclic_parallel = false;
          break;
        }
      }

  // Recurrence nabla S = A (x) S as an exact linear system in the
  // components of A. With S != 0 every A_i is pinned by the i-block, so
  // the solution, when it exists, is unique.
  if (ricci.is_zero()) {
    report.recurrence = RicciRecurrence::Undefined;
  } else {
    RationalMatrix sys(n * n * n, n);
    std::vector<Rational> rhs(static_cast<size_t>(n) * n * n);
    int row = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          sys.at(row, i) = ricci.at(j, k);
          rhs[row] = nabla_ricci.at(i, j, k);
          ++row;
        }
    const auto solved = solve_linear_exact(sys, rhs);
    if (std::holds_alternative<LinearInfeasible>(solved)) {
      report.recurrence = RicciRecurrence::NotRecurrent;
    } else {
      const auto& sol = std::get<LinearSolution>(solved);
      OneForm a(n);
      bool zero = true;
      for (int i = 0; i < n; ++i) {
        a[i] = sol.x[i];
        zero = zero && a[i].is_zero();
      }
      if (zero) {
        report.recurrence = RicciRecurrence::ParallelNotRecurrent;
      } else {
        report.recurrence = RicciRecurrence::Recurrent;
        report.recurrence_form = a;
      }
    }
  }

  // h at the solved mu.
  report.h = derivatives.lie_xi_metric;
  report.h += two * ricci;
  Bilinear02 etaterm = outer(eta, eta);
  etaterm.scale(two * params.mu);
  report.h += etaterm;
  report.nabla_h_zero = covariant_derivative_bilinear(gamma, report.h).is_zero();
  report.h_xi_xi = report.h.apply(spec.xi, spec.xi);

  report.d_eta_zero = derivatives.d_eta.is_zero();

  auto add_check = [&](std::string id, std::string stmt, bool applicable, const Rational& lhs,
                       const Rational& rhs) {
    ConsequenceCheck c;
    c.id = std::move(id);
    c.statement = std::move(stmt);
    c.applicable = applicable;
    c.holds = lhs == rhs;
    c.left = lhs.str();
    c.right = rhs.str();
    report.consequence_checks.push_back(std::move(c));
  };

  const Rational r = curvature.scalar;
  add_check("ricci-symmetric-unit-mu", "nabla S = 0 forces mu = 1", report.ricci_symmetric,
            params.mu, Rational(1));
  add_check("ricci-symmetric-scalar", "nabla S = 0 forces r = cterm - 4n + 2 lambda + 2",
            report.ricci_symmetric, r, cterm - four_n + two * params.lambda + two);
  add_check("eta-recurrent-scalar", "nabla S = eta (x) S forces r = 2 lambda + 2 mu + cterm",
            report.eta_recurrent, r, two * params.lambda + two * params.mu + cterm);
  {
    ConsequenceCheck c;
    c.id = "cyclic-ricci-iff-unit-mu";
    c.statement = "the cyclic sum of nabla S vanishes iff mu = 1";
    c.applicable = true;
    c.holds = report.cyclic_parallel == (params.mu == Rational(1));
    c.left = report.cyclic_parallel ? "cyclic" : "not cyclic";
    c.right = "mu = " + params.mu.str();
    report.consequence_checks.push_back(std::move(c));
  }
  add_check("cyclic-ricci-scalar", "cyclic Ricci forces r = cterm - 4n + 2 lambda + 2",
            report.cyclic_parallel, r, cterm - four_n + two * params.lambda + two);
  {
    const bool recurrent = report.recurrence == RicciRecurrence::Recurrent;
    Rational a_xi;
    if (recurrent) a_xi = report.recurrence_form->apply(spec.xi);
    add_check("ricci-recurrent-scalar",
              "nabla S = A (x) S forces r = 2 lambda + 2 mu + cterm + 4n (A(xi) - 1)", recurrent,
              r,
              two * params.lambda + two * params.mu + cterm + four_n * (a_xi - Rational(1)));
  }
  add_check("parallel-h-trace", "h(xi,xi) = -2 lambda - cterm + r", true, report.h_xi_xi,
            -two * params.lambda - cterm + r);
  add_check("colinear-potential-scalar",
            "a potential colinear with xi has constant factor when r = 2 lambda + 2 mu + cterm - 4n",
            true, r, two * params.lambda + two * params.mu + cterm - four_n);

  return report;
}

ParallelTensorReport parallel_tensor_reconstruct(const FrameManifoldSpec& spec,
                                                 const ConnectionCoefficients& gamma,
                                                 const CurvaturePackage& curvature,
                                                 const Rational& mu) {
  const int n = spec.dimension;
  const auto& eta = spec.eta;
  const Bilinear02 lie = lie_derivative_metric(spec.metric, gamma, spec.xi);

  ParallelTensorReport report;
  report.h = lie;
  report.h += Rational(2) * curvature.ricci;
  Bilinear02 etaterm = outer(eta, eta);
  etaterm.scale(Rational(2) * mu);
  report.h += etaterm;

  report.nabla_h_zero = covariant_derivative_bilinear(gamma, report.h).is_zero();
  report.h_xi_xi = report.h.apply(spec.xi, spec.xi);

  report.xi_slot_proportional = true;
  for (int i = 0; i < n; ++i) {
    Rational h_i_xi;
    for (int j = 0; j < n; ++j) h_i_xi += report.h.at(i, j) * spec.xi[j];
    if (h_i_xi != eta[i] * report.h_xi_xi) {
      report.xi_slot_proportional = false;
      report.xi_slot_witness = i + 1;
      break;
    }
  }

  report.proportional_to_metric = true;
  for (int i = 0; i < n && report.proportional_to_metric; ++i)
    for (int j = 0; j < n; ++j) {
      if (report.h.at(i, j) != report.h_xi_xi * spec.metric.at(i, j)) {
        report.proportional_to_metric = false;
        report.proportional_witness = {i + 1, j + 1};
        break;
      }
    }

  // Pin the bracket term to -h(xi,xi); the residual is then h - h(xi,xi) g.
  Bilinear02 reconstructed = report.h;
  Bilinear02 gterm = spec.metric;
  gterm.scale(-report.h_xi_xi);
  reconstructed += gterm;
  report.reconstructed_residual_zero = reconstructed.is_zero();

  return report;
}

} // namespace framegeo
