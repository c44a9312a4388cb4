#ifndef FRAMEGEO_MANIFOLD_HPP
#define FRAMEGEO_MANIFOLD_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "framegeo/checks.hpp"
#include "framegeo/structure.hpp"
#include "framegeo/tensors.hpp"

namespace framegeo {

/// A frame-homogeneous almost contact metric manifold: a global frame
/// e_1..e_n with constant Lie brackets, a constant SPD frame metric, the
/// structure tensor phi, the Reeb field xi and the derived 1-form eta.
/// This is the single source of truth for every computation downstream.
struct FrameManifoldSpec {
  std::string name;
  int dimension = 0;          // odd, >= 3
  Bilinear02 metric;          // SPD
  StructureConstants brackets;
  Endomorphism11 phi;
  FrameVector xi;
  OneForm eta;                // always derived from (metric, xi)
  std::optional<Rational> p;  // constant conformal scalar, when given

  friend bool operator==(const FrameManifoldSpec& a, const FrameManifoldSpec& b) {
    return a.name == b.name && a.dimension == b.dimension && a.metric == b.metric &&
           a.brackets == b.brackets && a.phi == b.phi && a.xi == b.xi && a.p == b.p;
  }
};

/// eta_a = sum_b G_ab xi_b. Throws SpecError unless eta(xi) = 1.
OneForm eta_from_xi(const Bilinear02& g, const FrameVector& xi);

/// Parse and fully validate a manifold document. Rejects unknown fields,
/// checks the metric is SPD, the brackets satisfy Jacobi, and g(xi,xi)=1;
/// every error names the offending field or invariant.
FrameManifoldSpec parse_spec(const nlohmann::json& document);

/// Convenience: parse from raw JSON text.
FrameManifoldSpec parse_spec_text(const std::string& text);

/// Canonical document for a spec; parse_spec(serialize_spec(s)) == s.
nlohmann::json serialize_spec(const FrameManifoldSpec& spec);

/// Check the almost contact metric axioms as exact matrix identities:
///   phi^2 = -Id + xi (x) eta,  eta o phi = 0,  phi xi = 0,  eta(xi) = 1
///   g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y)
///   g(X, phi Y) = -g(phi X, Y)
/// Three records; failures carry the first violated slot.
VerificationReport verify_almost_contact(const FrameManifoldSpec& spec);

} // namespace framegeo

#endif
