#include "framegeo/manifold.hpp"

#include <set>

#include "framegeo/errors.hpp"
#include "framegeo/linalg.hpp"

namespace framegeo {

namespace {

Rational rational_from_json(const nlohmann::json& v, const std::string& field) {
  if (v.is_number_integer()) {
    return Rational(BigInt(v.get<long long>()));
  }
  if (v.is_number_unsigned()) {
    return Rational(BigInt(v.get<unsigned long long>()));
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (!Rational::is_valid_literal(s)) {
      throw SpecError(field, "not a rational literal: \"" + s + "\"");
    }
    return Rational::parse(s);
  }
  throw SpecError(field, "expected a rational string \"a/b\" or an integer");
}

int int_from_json(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw SpecError(field, "expected an integer");
  }
  return v.get<int>();
}

std::string slot(int i) { return std::to_string(i + 1); }

std::string minor_failure_message(const SpdFailure& f) {
  if (f.asymmetric_at) {
    return "not symmetric at entry (" + slot(f.asymmetric_at->first) + "," +
           slot(f.asymmetric_at->second) + ")";
  }
  return "not positive definite: leading principal minor " +
         std::to_string(f.minor_order) + " = " + f.minor_value.str();
}

} // namespace

OneForm eta_from_xi(const Bilinear02& g, const FrameVector& xi) {
  const int n = g.dim();
  OneForm eta(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) eta[a] += g.at(a, b) * xi[b];
  }
  const Rational pairing = eta.apply(xi);
  if (pairing != Rational(1)) {
    throw SpecError("xi", "g(xi, xi) = " + pairing.str() + ", expected 1");
  }
  return eta;
}

FrameManifoldSpec parse_spec(const nlohmann::json& document) {
  if (!document.is_object()) {
    throw SpecError("document", "root must be an object");
  }
  static const std::set<std::string> known = {
      "name", "dimension", "metric", "structure_constants", "phi", "xi", "p"};
  for (const auto& item : document.items()) {
    if (!known.count(item.key())) {
      throw SpecError(item.key(), "unknown field");
    }
  }
  for (const char* required : {"name", "dimension", "metric", "structure_constants", "phi", "xi"}) {
    if (!document.contains(required)) {
      throw SpecError(required, "missing required field");
    }
  }

  FrameManifoldSpec spec;
  if (!document["name"].is_string()) throw SpecError("name", "expected a string");
  spec.name = document["name"].get<std::string>();

  const int n = int_from_json(document["dimension"], "dimension");
  if (n < 3 || n % 2 == 0) {
    throw SpecError("dimension", "must be an odd integer >= 3, got " + std::to_string(n));
  }
  spec.dimension = n;

  const auto& metric = document["metric"];
  if (!metric.is_array() || static_cast<int>(metric.size()) != n) {
    throw SpecError("metric", "expected " + std::to_string(n) + " rows");
  }
  spec.metric = Bilinear02(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = metric[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw SpecError("metric[" + slot(i) + "]", "expected " + std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      spec.metric.at(i, j) =
          rational_from_json(row[j], "metric[" + slot(i) + "][" + slot(j) + "]");
    }
  }
  if (const auto failure = spd_check(spec.metric)) {
    throw SpecError("metric", minor_failure_message(*failure));
  }

  const auto& sc = document["structure_constants"];
  if (!sc.is_array()) throw SpecError("structure_constants", "expected an array");
  spec.brackets = StructureConstants(n);
  static const std::set<std::string> entry_keys = {"i", "j", "k", "value"};
  for (size_t t = 0; t < sc.size(); ++t) {
    const std::string path = "structure_constants[" + std::to_string(t) + "]";
    const auto& entry = sc[t];
    if (!entry.is_object()) throw SpecError(path, "expected an object {i, j, k, value}");
    for (const auto& item : entry.items()) {
      if (!entry_keys.count(item.key())) throw SpecError(path + "." + item.key(), "unknown field");
    }
    for (const char* key : {"i", "j", "k", "value"}) {
      if (!entry.contains(key)) throw SpecError(path + "." + key, "missing required field");
    }
    const int i = int_from_json(entry["i"], path + ".i");
    const int j = int_from_json(entry["j"], path + ".j");
    const int k = int_from_json(entry["k"], path + ".k");
    if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n) {
      throw SpecError(path, "indices must be in 1.." + std::to_string(n));
    }
    if (i >= j) throw SpecError(path, "entries are stored for i < j only");
    if (!spec.brackets.coeff(i - 1, j - 1, k - 1).is_zero()) {
      throw SpecError(path, "duplicate entry for (i,j,k)");
    }
    spec.brackets.set(i - 1, j - 1, k - 1, rational_from_json(entry["value"], path + ".value"));
  }
  const auto violations = jacobi_check(spec.brackets);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw SpecError("structure_constants",
                    "Jacobi fails at (" + slot(v.i) + "," + slot(v.j) + "," + slot(v.l) +
                        "," + slot(v.k) + "), cyclic sum = " + v.sum.str());
  }

  const auto& phi = document["phi"];
  if (!phi.is_array() || static_cast<int>(phi.size()) != n) {
    throw SpecError("phi", "expected " + std::to_string(n) + " rows");
  }
  spec.phi = Endomorphism11(n);
  for (int a = 0; a < n; ++a) {
    const auto& row = phi[a];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw SpecError("phi[" + slot(a) + "]", "expected " + std::to_string(n) + " entries");
    }
    for (int b = 0; b < n; ++b) {
      spec.phi.at(a, b) = rational_from_json(row[b], "phi[" + slot(a) + "][" + slot(b) + "]");
    }
  }

  const auto& xi = document["xi"];
  if (!xi.is_array() || static_cast<int>(xi.size()) != n) {
    throw SpecError("xi", "expected " + std::to_string(n) + " components");
  }
  spec.xi = FrameVector(n);
  for (int a = 0; a < n; ++a) {
    spec.xi[a] = rational_from_json(xi[a], "xi[" + slot(a) + "]");
  }
  spec.eta = eta_from_xi(spec.metric, spec.xi);

  if (document.contains("p")) {
    spec.p = rational_from_json(document["p"], "p");
  }
  return spec;
}

FrameManifoldSpec parse_spec_text(const std::string& text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("document", std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(document);
}

nlohmann::json serialize_spec(const FrameManifoldSpec& spec) {
  const int n = spec.dimension;
  nlohmann::json doc;
  doc["name"] = spec.name;
  doc["dimension"] = n;

  auto matrix_json = [n](auto&& entry) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < n; ++j) row.push_back(entry(i, j).str());
      rows.push_back(std::move(row));
    }
    return rows;
  };
  doc["metric"] = matrix_json([&](int i, int j) { return spec.metric.at(i, j); });
  doc["phi"] = matrix_json([&](int a, int b) { return spec.phi.at(a, b); });

  nlohmann::json sc = nlohmann::json::array();
  for (const auto& e : spec.brackets.entries()) {
    sc.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"value", e.value.str()}});
  }
  doc["structure_constants"] = std::move(sc);

  nlohmann::json xi = nlohmann::json::array();
  for (int a = 0; a < n; ++a) xi.push_back(spec.xi[a].str());
  doc["xi"] = std::move(xi);

  if (spec.p) doc["p"] = spec.p->str();
  return doc;
}

VerificationReport verify_almost_contact(const FrameManifoldSpec& spec) {
  const int n = spec.dimension;
  const auto& g = spec.metric;
  const auto& phi = spec.phi;
  const auto& eta = spec.eta;
  const auto& xi = spec.xi;

  VerificationReport report;

  // phi^2 = -Id + xi (x) eta, together with eta o phi = 0, phi xi = 0 and
  // eta(xi) = 1; one record for the structure-tensor axiom group.
  {
    const char* id = "structure-axioms";
    const char* stmt =
        "phi^2(X) = -X + eta(X) xi;  eta(xi) = 1;  eta(phi X) = 0;  phi(xi) = 0";
    std::optional<IdentityRecord> failure;
    for (int a = 0; a < n && !failure; ++a) {
      for (int b = 0; b < n && !failure; ++b) {
        Rational lhs;
        for (int m = 0; m < n; ++m) lhs += phi.at(a, m) * phi.at(m, b);
        const Rational rhs = (a == b ? Rational(-1) : Rational(0)) + xi[a] * eta[b];
        if (lhs != rhs) {
          failure = IdentityRecord::fail(id, stmt, {a + 1, b + 1}, lhs.str(), rhs.str());
        }
      }
    }
    if (!failure && eta.apply(xi) != Rational(1)) {
      failure = IdentityRecord::fail(id, stmt, {}, eta.apply(xi).str(), "1");
    }
    for (int b = 0; b < n && !failure; ++b) {
      Rational lhs;
      for (int a = 0; a < n; ++a) lhs += eta[a] * phi.at(a, b);
      if (!lhs.is_zero()) {
        failure = IdentityRecord::fail(id, stmt, {b + 1}, lhs.str(), "0");
      }
    }
    if (!failure) {
      const FrameVector phixi = phi.apply(xi);
      for (int a = 0; a < n && !failure; ++a) {
        if (!phixi[a].is_zero()) {
          failure = IdentityRecord::fail(id, stmt, {a + 1}, phixi[a].str(), "0");
        }
      }
    }
    report.records.push_back(failure ? *failure : IdentityRecord::pass(id, stmt));
  }

  // g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)
  {
    const char* id = "metric-phi-compatibility";
    const char* stmt = "g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y)";
    std::optional<IdentityRecord> failure;
    for (int i = 0; i < n && !failure; ++i) {
      for (int j = 0; j < n && !failure; ++j) {
        const Rational lhs = g.apply(phi.column(i), phi.column(j));
        const Rational rhs = g.at(i, j) - eta[i] * eta[j];
        if (lhs != rhs) {
          failure = IdentityRecord::fail(id, stmt, {i + 1, j + 1}, lhs.str(), rhs.str());
        }
      }
    }
    report.records.push_back(failure ? *failure : IdentityRecord::pass(id, stmt));
  }

  // g(X, phi Y) = -g(phi X, Y)
  {
    const char* id = "phi-skew";
    const char* stmt = "g(X, phi Y) = -g(phi X, Y)";
    std::optional<IdentityRecord> failure;
    for (int i = 0; i < n && !failure; ++i) {
      for (int j = 0; j < n && !failure; ++j) {
        Rational lhs, rhs;
        for (int m = 0; m < n; ++m) {
          lhs += g.at(i, m) * phi.at(m, j);
          rhs -= phi.at(m, i) * g.at(m, j);
        }
        if (lhs != rhs) {
          failure = IdentityRecord::fail(id, stmt, {i + 1, j + 1}, lhs.str(), rhs.str());
        }
      }
    }
    report.records.push_back(failure ? *failure : IdentityRecord::pass(id, stmt));
  }

  return report;
}

} // namespace framegeo
