#include "framegeo/analysis.hpp"

#include <sstream>

namespace framegeo {

namespace {

std::string format_vector(const FrameVector& v) {
  std::string out;
  for (int k = 0; k < v.dim(); ++k) {
    if (v[k].is_zero()) continue;
    const Rational coeff = v[k];
    const Rational mag = abs(coeff);
    if (out.empty()) {
      out += coeff.sign() < 0 ? "-" : "";
    } else {
      out += coeff.sign() < 0 ? " - " : " + ";
    }
    if (mag != Rational(1)) out += mag.str() + " ";
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json record_json(const IdentityRecord& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["statement"] = r.statement;
  switch (r.status) {
    case IdentityRecord::Status::Pass: j["status"] = "pass"; break;
    case IdentityRecord::Status::Fail: j["status"] = "fail"; break;
    case IdentityRecord::Status::Skipped: j["status"] = "skipped"; break;
  }
  j["witness"] = r.witness;
  j["left"] = r.left ? nlohmann::json(*r.left) : nlohmann::json(nullptr);
  j["right"] = r.right ? nlohmann::json(*r.right) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json matrix_json(const Bilinear02& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < t.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < t.dim(); ++j) row.push_back(t.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json spec_section(const AnalysisResult& r) {
  nlohmann::json j;
  j["name"] = r.spec.name;
  j["dimension"] = r.spec.dimension;
  return j;
}

nlohmann::json connection_section(const AnalysisResult& r) {
  const int n = r.spec.dimension;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) {
      nlohmann::json comps = nlohmann::json::array();
      for (int k = 0; k < n; ++k) comps.push_back(r.connection.coeff(i, j, k).str());
      row.push_back(std::move(comps));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json curvature_section(const AnalysisResult& r) {
  const int n = r.spec.dimension;
  nlohmann::json j;
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    for (int jj = i + 1; jj < n; ++jj) {
      for (int k = 0; k < n; ++k) {
        const FrameVector v = r.curvature.riemann.apply(i, jj, k);
        if (v.is_zero()) continue;
        nlohmann::json comps = nlohmann::json::array();
        for (int l = 0; l < n; ++l) comps.push_back(v[l].str());
        entries.push_back({{"i", i + 1}, {"j", jj + 1}, {"k", k + 1}, {"value", comps}});
      }
    }
  }
  j["riemann_nonzero"] = std::move(entries);
  j["ricci"] = matrix_json(r.curvature.ricci);
  j["scalar"] = r.curvature.scalar.str();
  return j;
}

nlohmann::json identities_section(const AnalysisResult& r) {
  nlohmann::json j;
  j["note"] = VerificationReport::kFrameSlotNote;
  nlohmann::json ac = nlohmann::json::array();
  for (const auto& rec : r.almost_contact.records) ac.push_back(record_json(rec));
  j["almost_contact"] = std::move(ac);
  nlohmann::json km = nlohmann::json::array();
  for (const auto& rec : r.kenmotsu.records) km.push_back(record_json(rec));
  j["kenmotsu"] = std::move(km);
  j["is_kenmotsu"] = r.is_kenmotsu;
  return j;
}

nlohmann::json soliton_section(const AnalysisResult& r) {
  nlohmann::json j;
  const auto& result = *r.soliton;
  if (const auto* sol = std::get_if<SolitonSolution>(&result)) {
    const auto& p = sol->parameters;
    j["status"] = "admitted";
    j["variant"] = std::string(variant_name(p.variant));
    j["p"] = p.p ? nlohmann::json(p.p->str()) : nlohmann::json(nullptr);
    j["lambda"] = p.lambda.str();
    j["mu"] = p.mu.str();
    j["residual_zero"] = sol->residual.is_zero();
    j["scalar_relation"] = {{"holds", sol->scalar_relation_holds},
                            {"asserted", r.is_kenmotsu}};
  } else {
    const auto& cert = std::get<InfeasibilityCertificate>(result);
    j["status"] = "infeasible";
    j["witness"] = {{"slot", {cert.slot_i, cert.slot_j}}, {"value", cert.value.str()}};
  }
  return j;
}

nlohmann::json classification_section(const AnalysisResult& r) {
  const auto& c = *r.classification;
  nlohmann::json j;
  j["ricci_symmetric"] = c.ricci_symmetric;
  j["eta_recurrent"] = c.eta_recurrent;
  if (!c.eta_recurrent) j["eta_recurrent_witness"] = c.eta_recurrent_witness;
  j["cyclic_parallel"] = c.cyclic_parallel;
  j["ricci_recurrence"] = std::string(recurrence_name(c.recurrence));
  if (c.recurrence_form) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < c.recurrence_form->dim(); ++i) a.push_back((*c.recurrence_form)[i].str());
    j["recurrence_form"] = std::move(a);
  }
  j["parallel_h"] = {{"h", matrix_json(c.h)},
                     {"nabla_h_zero", c.nabla_h_zero},
                     {"h_xi_xi", c.h_xi_xi.str()}};
  j["d_eta_zero"] = c.d_eta_zero;
  j["consequences_asserted"] = r.is_kenmotsu;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& ck : c.consequence_checks) {
    checks.push_back({{"id", ck.id},
                      {"statement", ck.statement},
                      {"applicable", ck.applicable},
                      {"holds", ck.holds},
                      {"left", ck.left ? nlohmann::json(*ck.left) : nlohmann::json(nullptr)},
                      {"right", ck.right ? nlohmann::json(*ck.right) : nlohmann::json(nullptr)}});
  }
  j["consequence_checks"] = std::move(checks);
  return j;
}

nlohmann::json parallel_section(const AnalysisResult& r) {
  const auto& p = *r.parallel_h;
  nlohmann::json j;
  j["h"] = matrix_json(p.h);
  j["nabla_h_zero"] = p.nabla_h_zero;
  j["h_xi_xi"] = p.h_xi_xi.str();
  j["xi_slot_proportional"] = p.xi_slot_proportional;
  if (p.xi_slot_witness) j["xi_slot_witness"] = *p.xi_slot_witness;
  j["proportional_to_metric"] = p.proportional_to_metric;
  if (p.proportional_witness) {
    j["proportional_witness"] = {p.proportional_witness->first, p.proportional_witness->second};
  }
  j["reconstructed_residual_zero"] = p.reconstructed_residual_zero;
  return j;
}

void render_records(std::ostringstream& out, const std::vector<IdentityRecord>& records) {
  for (const auto& rec : records) {
    const char* tag = rec.status == IdentityRecord::Status::Pass   ? "pass"
                      : rec.status == IdentityRecord::Status::Fail ? "FAIL"
                                                                   : "skip";
    out << "  [" << tag << "] " << rec.id << ": " << rec.statement << "\n";
    if (rec.status == IdentityRecord::Status::Fail) {
      out << "         at slot (";
      for (size_t t = 0; t < rec.witness.size(); ++t) {
        if (t) out << ",";
        out << rec.witness[t];
      }
      out << "): left = " << *rec.left << ", right = " << *rec.right << "\n";
    }
  }
}

void render_tables(std::ostringstream& out, const AnalysisResult& r) {
  const int n = r.spec.dimension;
  out << "manifold: " << r.spec.name << " (dimension " << n << ")\n\n";
  out << "connection (nabla_{e_i} e_j):\n";
  for (int i = 0; i < n; ++i) {
    out << " ";
    for (int j = 0; j < n; ++j) {
      out << " nabla_e" << (i + 1) << " e" << (j + 1) << " = "
          << format_vector(r.connection.derivative(i, j));
      if (j + 1 < n) out << ",";
    }
    out << "\n";
  }
  out << "\ncurvature (nonzero R(e_i,e_j)e_k, i < j):\n";
  bool any = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const FrameVector v = r.curvature.riemann.apply(i, j, k);
        if (v.is_zero()) continue;
        any = true;
        out << "  R(e" << (i + 1) << ",e" << (j + 1) << ")e" << (k + 1) << " = "
            << format_vector(v) << "\n";
      }
  if (!any) out << "  (flat)\n";
  out << "\nricci tensor:\n";
  for (int i = 0; i < n; ++i) {
    out << "  [";
    for (int j = 0; j < n; ++j) {
      out << r.curvature.ricci.at(i, j).str();
      if (j + 1 < n) out << ", ";
    }
    out << "]\n";
  }
  out << "scalar curvature: r = " << r.curvature.scalar.str() << "\n";
  out << "\nidentity checks (" << VerificationReport::kFrameSlotNote << "):\n";
  render_records(out, r.almost_contact.records);
  render_records(out, r.kenmotsu.records);
  out << "kenmotsu: " << (r.is_kenmotsu ? "yes" : "no") << "\n";
}

} // namespace

AnalysisResult run_pipeline(const FrameManifoldSpec& spec, const AnalyzeOptions& options) {
  AnalysisResult result;
  result.spec = spec;
  if (options.p_override) result.spec.p = options.p_override;

  result.connection = koszul_connection(spec.metric, spec.brackets);
  result.curvature = curvature_package(spec.metric, spec.brackets, result.connection);
  result.derivatives = derivative_package(spec, result.connection, result.curvature.ricci);

  result.almost_contact = verify_almost_contact(spec);
  VerificationReport defining = verify_kenmotsu(spec, result.connection);
  result.is_kenmotsu = defining.all_passed();
  VerificationReport derived = verify_derived_identities(
      spec, result.curvature, result.derivatives, result.is_kenmotsu, options.force);
  result.kenmotsu = std::move(defining);
  for (auto& rec : derived.records) result.kenmotsu.records.push_back(std::move(rec));

  if (!options.run_soliton) return result;

  result.decomposition =
      eta_einstein_decompose(result.curvature.ricci, spec.metric, spec.eta);
  result.soliton = solve_soliton_constants(
      spec.metric, spec.eta, spec.xi, result.curvature.ricci, result.curvature.scalar,
      result.derivatives.lie_xi_metric, result.spec.p, options.variant);
  if (const auto* sol = result.solution()) {
    result.classification =
        classify(result.spec, result.connection, result.curvature, result.derivatives, *sol);
    result.parallel_h = parallel_tensor_reconstruct(result.spec, result.connection,
                                                    result.curvature, sol->parameters.mu);
  }
  return result;
}

int verify_exit_code(const AnalysisResult& result) {
  return result.identities_pass() ? 0 : 1;
}

int analyze_exit_code(const AnalysisResult& result) {
  const SolitonSolution* sol = result.solution();
  if (!sol) return 1;
  if (!result.is_kenmotsu) return 0; // consequence checks presuppose Kenmotsu
  if (!sol->scalar_relation_holds) return 1;
  if (result.classification && !result.classification->all_applicable_hold()) return 1;
  return 0;
}

nlohmann::json verify_report_json(const AnalysisResult& result) {
  nlohmann::json j;
  j["schema"] = "framegeo-verify/1";
  j["spec"] = spec_section(result);
  j["connection"] = connection_section(result);
  j["curvature"] = curvature_section(result);
  j["identities"] = identities_section(result);
  j["verdict"] = verify_exit_code(result) == 0 ? "pass" : "fail";
  return j;
}

nlohmann::json analyze_report_json(const AnalysisResult& result) {
  nlohmann::json j;
  j["schema"] = "framegeo-analyze/1";
  j["spec"] = spec_section(result);
  j["connection"] = connection_section(result);
  j["curvature"] = curvature_section(result);
  j["identities"] = identities_section(result);
  if (result.decomposition) {
    nlohmann::json d;
    if (result.decomposition->decomposable()) {
      d["a"] = result.decomposition->coefficients->first.str();
      d["b"] = result.decomposition->coefficients->second.str();
    } else {
      d["witness"] = {result.decomposition->witness->first, result.decomposition->witness->second};
    }
    j["eta_einstein"] = std::move(d);
  }
  j["soliton"] = soliton_section(result);
  j["classification"] =
      result.classification ? classification_section(result) : nlohmann::json(nullptr);
  j["parallel_h"] = result.parallel_h ? parallel_section(result) : nlohmann::json(nullptr);
  j["verdict"] = analyze_exit_code(result) == 0 ? "pass" : "fail";
  return j;
}

std::string verify_report_text(const AnalysisResult& result) {
  std::ostringstream out;
  render_tables(out, result);
  out << "\nverdict: " << (verify_exit_code(result) == 0 ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string analyze_report_text(const AnalysisResult& result) {
  std::ostringstream out;
  render_tables(out, result);

  if (result.decomposition) {
    out << "\neta-einstein decomposition (S = a g + b eta(x)eta): ";
    if (result.decomposition->decomposable()) {
      out << "a = " << result.decomposition->coefficients->first.str()
          << ", b = " << result.decomposition->coefficients->second.str() << "\n";
    } else {
      out << "not decomposable, witness slot (" << result.decomposition->witness->first << ","
          << result.decomposition->witness->second << ")\n";
    }
  }

  if (result.soliton) {
    out << "\nsoliton solve:\n";
    if (const auto* sol = result.solution()) {
      const auto& p = sol->parameters;
      out << "  variant " << variant_name(p.variant);
      if (p.p) out << ", p = " << p.p->str();
      out << "\n  lambda = " << p.lambda.str() << ", mu = " << p.mu.str() << "\n";
      out << "  residual identically zero: soliton admitted\n";
      out << "  scalar relation r = cterm - 4n + 2 lambda + 2 mu: "
          << (sol->scalar_relation_holds ? "holds" : "fails")
          << (result.is_kenmotsu ? "" : " (not asserted: spec is not Kenmotsu)") << "\n";
    } else {
      const auto& cert = std::get<InfeasibilityCertificate>(*result.soliton);
      out << "  infeasible: residual (" << cert.slot_i << "," << cert.slot_j
          << ") = " << cert.value.str() << "\n";
    }
  }

  if (result.classification) {
    const auto& c = *result.classification;
    out << "\nclassification:\n";
    out << "  ricci symmetric (nabla S = 0): " << (c.ricci_symmetric ? "yes" : "no") << "\n";
    out << "  eta-recurrent (nabla S = eta(x)S): " << (c.eta_recurrent ? "yes" : "no") << "\n";
    out << "  cyclic ricci (cyclic sum of nabla S = 0): " << (c.cyclic_parallel ? "yes" : "no")
        << "\n";
    out << "  ricci recurrence: " << recurrence_name(c.recurrence) << "\n";
    out << "  h = lie_xi g + 2S + 2 mu eta(x)eta: nabla h "
        << (c.nabla_h_zero ? "= 0" : "!= 0") << ", h(xi,xi) = " << c.h_xi_xi.str() << "\n";
    out << "  d eta = 0: " << (c.d_eta_zero ? "yes" : "no") << "\n";
    out << "  consequence checks" << (result.is_kenmotsu ? "" : " (not asserted)") << ":\n";
    for (const auto& ck : c.consequence_checks) {
      out << "    [" << (ck.applicable ? (ck.holds ? "pass" : "FAIL") : "n/a ") << "] " << ck.id;
      if (ck.applicable && !ck.holds) {
        out << " (left = " << *ck.left << ", right = " << *ck.right << ")";
      }
      out << "\n";
    }
  }

  out << "\nverdict: " << (analyze_exit_code(result) == 0 ? "PASS" : "FAIL") << "\n";
  return out.str();
}

} // namespace framegeo
