#ifndef FRAMEGEO_SOLITON_HPP
#define FRAMEGEO_SOLITON_HPP

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "framegeo/geometry.hpp"
#include "framegeo/manifold.hpp"

namespace framegeo {

/// Which limiting case of the soliton equation
///   lie_xi g + 2S + [2 lambda - r + (p + 2/dim)] g + 2 mu eta (x) eta = 0
/// is being solved. The eta-einstein variant drops the (p + 2/dim) term;
/// the einstein variants force mu = 0.
enum class SolitonVariant {
  ConformalEtaEinstein,
  EtaEinstein,
  ConformalEinstein,
  Einstein,
};

std::string_view variant_name(SolitonVariant v);
std::optional<SolitonVariant> variant_from_name(std::string_view name);

inline bool variant_has_conformal_term(SolitonVariant v) {
  return v == SolitonVariant::ConformalEtaEinstein || v == SolitonVariant::ConformalEinstein;
}
inline bool variant_forces_mu_zero(SolitonVariant v) {
  return v == SolitonVariant::ConformalEinstein || v == SolitonVariant::Einstein;
}

struct SolitonParameters {
  Rational lambda;
  Rational mu;
  std::optional<Rational> p;
  SolitonVariant variant = SolitonVariant::ConformalEtaEinstein;

  /// (p + 2/dim) for the conformal variants, 0 otherwise. Throws
  /// SpecError when the variant needs p and none was given.
  Rational conformal_term(int dim) const;
};

/// Left-hand side of the soliton equation at the given parameters;
/// identically zero exactly when the metric admits the soliton.
Bilinear02 soliton_residual(const Bilinear02& g, const OneForm& eta, const Bilinear02& ricci,
                            const Rational& scalar, const Bilinear02& lie_xi_metric,
                            const SolitonParameters& params);

/// First nonzero slot of the residual, 1-based.
struct InfeasibilityCertificate {
  int slot_i = 0, slot_j = 0;
  Rational value;
};

struct SolitonSolution {
  SolitonParameters parameters;
  Bilinear02 residual; // identically zero by construction
  /// r = (p + 2/dim) - 4n + 2 lambda + 2 mu, with the conformal term
  /// toggled per variant (dim = 2n+1).
  bool scalar_relation_holds = false;
};

using SolitonSolveResult = std::variant<SolitonSolution, InfeasibilityCertificate>;

/// Exact solve for the constants (lambda, mu).
///
/// The unknowns enter affinely: residual = A + 2 lambda g + 2 mu eta(x)eta
/// with A = lie_xi g + 2S + [-r + (p + 2/dim)] g. Two pinned slots
/// determine the candidate: u = e_i - eta(e_i) xi for the first i with
/// u != 0 (so eta(u) = 0) gives lambda = -A(u,u) / (2 g(u,u)), and the
/// (xi,xi) slot gives mu = -(A(xi,xi) + 2 lambda)/2. The candidate is then
/// verified on every slot; a nonzero slot is returned as the
/// infeasibility certificate rather than any least-squares compromise.
SolitonSolveResult solve_soliton_constants(const Bilinear02& g, const OneForm& eta,
                                           const FrameVector& xi, const Bilinear02& ricci,
                                           const Rational& scalar,
                                           const Bilinear02& lie_xi_metric,
                                           std::optional<Rational> p, SolitonVariant variant);

/// S = a g + b eta (x) eta when the Ricci tensor is eta-Einstein;
/// otherwise the first slot where the reconstruction misses.
struct EtaEinsteinDecomposition {
  std::optional<std::pair<Rational, Rational>> coefficients; // (a, b)
  std::optional<std::pair<int, int>> witness;                // 1-based slot

  bool decomposable() const { return coefficients.has_value(); }
};

EtaEinsteinDecomposition eta_einstein_decompose(const Bilinear02& ricci, const Bilinear02& g,
                                                const OneForm& eta);

/// r = (p + 2/dim) - 4n + 2 lambda + 2 mu, exact equality (dim = 2n+1).
bool check_scalar_relation(int dim, const Rational& p, const Rational& lambda,
                           const Rational& mu, const Rational& scalar);

/// One recorded consequence check. Checks whose hypothesis does not hold
/// on this manifold are kept in the report with applicable = false.
struct ConsequenceCheck {
  std::string id;
  std::string statement;
  bool applicable = false;
  bool holds = false;
  std::optional<std::string> left, right;
};

enum class RicciRecurrence {
  Recurrent,            // nabla S = A (x) S with a nonzero 1-form A
  ParallelNotRecurrent, // nabla S = 0; recurrence demands nonzero A
  NotRecurrent,         // no 1-form satisfies the equation
  Undefined,            // S = 0: every A works, nothing is pinned
};

std::string_view recurrence_name(RicciRecurrence r);

struct ClassificationReport {
  bool ricci_symmetric = false; // nabla S = 0
  bool eta_recurrent = false;   // nabla S = eta (x) S
  std::vector<int> eta_recurrent_witness; // first failing slot when false
  bool cyclic_parallel = false; // cyclic sum of nabla S vanishes
  RicciRecurrence recurrence = RicciRecurrence::NotRecurrent;
  std::optional<OneForm> recurrence_form;

  Bilinear02 h; // lie_xi g + 2S + 2 mu eta (x) eta at the solved mu
  bool nabla_h_zero = false;
  Rational h_xi_xi;

  bool d_eta_zero = false;
  std::vector<ConsequenceCheck> consequence_checks;

  bool all_applicable_hold() const {
    for (const auto& c : consequence_checks)
      if (c.applicable && !c.holds) return false;
    return true;
  }
};

/// Decidable classification of the Ricci derivative structure plus the
/// scalar-curvature consequence checks tied to the solved parameters.
ClassificationReport classify(const FrameManifoldSpec& spec,
                              const ConnectionCoefficients& gamma,
                              const CurvaturePackage& curvature,
                              const DerivativePackage& derivatives,
                              const SolitonSolution& solution);

/// Reconstruction route: build h = lie_xi g + 2S + 2 mu eta (x) eta for a
/// chosen mu, test whether h is parallel and proportional to the metric,
/// and confirm that pinning the bracket term to -h(xi,xi) zeroes the
/// soliton residual.
struct ParallelTensorReport {
  Bilinear02 h;
  bool nabla_h_zero = false;
  Rational h_xi_xi;
  bool xi_slot_proportional = false; // h(Y,xi) = eta(Y) h(xi,xi)
  std::optional<int> xi_slot_witness;
  bool proportional_to_metric = false; // h = h(xi,xi) g
  std::optional<std::pair<int, int>> proportional_witness;
  bool reconstructed_residual_zero = false;
};

ParallelTensorReport parallel_tensor_reconstruct(const FrameManifoldSpec& spec,
                                                 const ConnectionCoefficients& gamma,
                                                 const CurvaturePackage& curvature,
                                                 const Rational& mu);

} // namespace framegeo

#endif
