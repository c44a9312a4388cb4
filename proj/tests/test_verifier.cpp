#include <doctest.h>

#include "framegeo/catalog.hpp"
#include "framegeo/verifier.hpp"

using namespace framegeo;

namespace {

struct Prepared {
  FrameManifoldSpec spec;
  ConnectionCoefficients gamma;
  CurvaturePackage curvature;
  DerivativePackage derivatives;
};

Prepared prepare(const FrameManifoldSpec& spec) {
  Prepared p;
  p.spec = spec;
  p.gamma = koszul_connection(spec.metric, spec.brackets);
  p.curvature = curvature_package(spec.metric, spec.brackets, p.gamma);
  p.derivatives = derivative_package(spec, p.gamma, p.curvature.ricci);
  return p;
}

Prepared kenmotsu3() {
  return prepare(parse_spec_text(std::string(*catalog_document("kenmotsu3"))));
}

Prepared flat3() { return prepare(parse_spec_text(std::string(*catalog_document("flat3")))); }

} // namespace

TEST_CASE("kenmotsu3 passes both defining identities and all seven derived ones") {
  const auto p = kenmotsu3();
  const auto defining = verify_kenmotsu(p.spec, p.gamma);
  REQUIRE(defining.records.size() == 2);
  CHECK(defining.all_passed());

  const auto derived = verify_derived_identities(p.spec, p.curvature, p.derivatives, true);
  REQUIRE(derived.records.size() == 7);
  CHECK(derived.all_passed());
  for (const auto& rec : derived.records) {
    CHECK(rec.status == IdentityRecord::Status::Pass);
  }
}

TEST_CASE("identity record ids are unique and fixed") {
  const auto p = kenmotsu3();
  auto report = verify_kenmotsu(p.spec, p.gamma);
  const auto derived = verify_derived_identities(p.spec, p.curvature, p.derivatives, true);
  for (const auto& r : derived.records) report.records.push_back(r);
  REQUIRE(report.records.size() == 9);
  const std::vector<std::string> expected = {
      "nabla-phi",        "nabla-xi",          "eta-of-curvature",
      "curvature-xi-argument", "curvature-xi-direction", "ricci-xi",
      "ricci-phi-invariance",  "nabla-eta",         "lie-xi-metric"};
  for (size_t t = 0; t < expected.size(); ++t) CHECK(report.records[t].id == expected[t]);
}

TEST_CASE("flat control fails the xi derivative identity at e1") {
  const auto p = flat3();
  const auto defining = verify_kenmotsu(p.spec, p.gamma);
  CHECK(!defining.all_passed());
  const auto* rec = defining.find("nabla-xi");
  REQUIRE(rec != nullptr);
  CHECK(rec->status == IdentityRecord::Status::Fail);
  // nabla_{e1} xi = 0 while e1 - eta(e1) xi = e1: first mismatch at component 1
  CHECK(rec->witness == std::vector<int>{1, 1});
  CHECK(*rec->left == "0");
  CHECK(*rec->right == "1");
}

TEST_CASE("derived identities are skipped on non-kenmotsu specs unless forced") {
  const auto p = flat3();
  const auto skipped = verify_derived_identities(p.spec, p.curvature, p.derivatives, false);
  REQUIRE(skipped.records.size() == 7);
  for (const auto& rec : skipped.records) {
    CHECK(rec.status == IdentityRecord::Status::Skipped);
  }
  CHECK(skipped.all_passed()); // skipped records do not fail a report

  const auto forced = verify_derived_identities(p.spec, p.curvature, p.derivatives, false, true);
  const auto* ricci_xi = forced.find("ricci-xi");
  REQUIRE(ricci_xi != nullptr);
  // S = 0 but -2n eta(e3) = -2
  CHECK(ricci_xi->status == IdentityRecord::Status::Fail);
  CHECK(ricci_xi->witness == std::vector<int>{3});
  CHECK(*ricci_xi->left == "0");
  CHECK(*ricci_xi->right == "-2");
}

TEST_CASE("doubling the warped bracket breaks the xi derivative with a witness") {
  auto mutated = parse_spec_text(std::string(*catalog_document("kenmotsu3")));
  mutated.brackets.set(0, 2, 0, Rational(2)); // [e1,e3] = 2 e1
  REQUIRE(jacobi_check(mutated.brackets).empty());
  const auto p = prepare(mutated);
  const auto defining = verify_kenmotsu(p.spec, p.gamma);
  const auto* rec = defining.find("nabla-xi");
  REQUIRE(rec != nullptr);
  CHECK(rec->status == IdentityRecord::Status::Fail);
  // nabla_{e1} xi = 2 e1 but the identity demands e1
  CHECK(rec->witness == std::vector<int>{1, 1});
  CHECK(*rec->left == "2");
  CHECK(*rec->right == "1");
}

TEST_CASE("ricci-phi-invariance instance at (e3,e3)") {
  const auto p = kenmotsu3();
  // S(phi e3, phi e3) = 0 and S(e3,e3) + 2n = -2 + 2 = 0
  const FrameVector phie3 = p.spec.phi.column(2);
  CHECK(p.curvature.ricci.apply(phie3, phie3) == Rational(0));
  CHECK(p.curvature.ricci.at(2, 2) + Rational(2) == Rational(0));
}
