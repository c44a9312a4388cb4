#ifndef FRAMEGEO_ANALYSIS_HPP
#define FRAMEGEO_ANALYSIS_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "framegeo/soliton.hpp"
#include "framegeo/verifier.hpp"

namespace framegeo {

struct AnalyzeOptions {
  /// Overrides the document's p when set (flag beats document).
  std::optional<Rational> p_override;
  SolitonVariant variant = SolitonVariant::ConformalEtaEinstein;
  /// Evaluate the derived identities even when the spec is not Kenmotsu.
  bool force = false;
  /// False for the verify command: identity checks only.
  bool run_soliton = true;
};

/// Everything one run computes. The verify and analyze commands share
/// this, so their overlapping report sections are computed exactly once
/// and can never diverge.
struct AnalysisResult {
  FrameManifoldSpec spec;
  ConnectionCoefficients connection;
  CurvaturePackage curvature;
  DerivativePackage derivatives;
  VerificationReport almost_contact; // 3 records
  VerificationReport kenmotsu;       // 9 records (2 defining + 7 derived)
  bool is_kenmotsu = false;

  std::optional<EtaEinsteinDecomposition> decomposition;
  std::optional<SolitonSolveResult> soliton;
  std::optional<ClassificationReport> classification; // when a solution exists
  std::optional<ParallelTensorReport> parallel_h;     // when a solution exists

  bool identities_pass() const {
    return almost_contact.all_passed() && kenmotsu.all_passed();
  }
  const SolitonSolution* solution() const {
    if (!soliton) return nullptr;
    return std::get_if<SolitonSolution>(&*soliton);
  }
};

/// Run the full pipeline on a validated spec. Throws SpecError when the
/// chosen variant needs p and neither the flag nor the document has one.
AnalysisResult run_pipeline(const FrameManifoldSpec& spec, const AnalyzeOptions& options);

/// Exit statuses: 0 pass, 1 mathematical failure. (Input errors exit 2
/// and never reach these.)
int verify_exit_code(const AnalysisResult& result);
int analyze_exit_code(const AnalysisResult& result);

/// Structured reports; serialization is deterministic (sorted keys,
/// canonical "a/b" rational strings, never floating point).
nlohmann::json verify_report_json(const AnalysisResult& result);
nlohmann::json analyze_report_json(const AnalysisResult& result);

/// Human-readable reports, tables first: connection, curvature, Ricci,
/// scalar curvature, then the identity records and (for analyze) the
/// soliton solve and classification.
std::string verify_report_text(const AnalysisResult& result);
std::string analyze_report_text(const AnalysisResult& result);

} // namespace framegeo

#endif
