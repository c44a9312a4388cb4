#include <doctest.h>

#include "generators.hpp"
#include "oracle.hpp"

#include "framegeo/catalog.hpp"
#include "framegeo/errors.hpp"
#include "framegeo/soliton.hpp"

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

SolitonParameters conformal_params(const Rational& lambda, const Rational& mu, const Rational& p) {
  SolitonParameters params;
  params.lambda = lambda;
  params.mu = mu;
  params.p = p;
  params.variant = SolitonVariant::ConformalEtaEinstein;
  return params;
}

} // namespace

TEST_CASE("residual vanishes at (-2, 1, -2/3) on kenmotsu3") {
  const auto k = kenmotsu3();
  const Bilinear02 residual =
      soliton_residual(k.spec.metric, k.spec.eta, k.curvature.ricci, k.curvature.scalar,
                       k.derivatives.lie_xi_metric,
                       conformal_params(Rational(-2), Rational(1), Rational(-2, 3)));
  CHECK(residual.is_zero());
}

TEST_CASE("residual at (0, 0, -2/3) is diag(4, 4, 2)") {
  const auto k = kenmotsu3();
  const Bilinear02 residual =
      soliton_residual(k.spec.metric, k.spec.eta, k.curvature.ricci, k.curvature.scalar,
                       k.derivatives.lie_xi_metric,
                       conformal_params(Rational(0), Rational(0), Rational(-2, 3)));
  Bilinear02 expected(3);
  expected.at(0, 0) = 4;
  expected.at(1, 1) = 4;
  expected.at(2, 2) = 2;
  CHECK(residual == expected);
}

TEST_CASE("missing p is an explicit input error") {
  const auto k = kenmotsu3();
  SolitonParameters params;
  params.variant = SolitonVariant::ConformalEtaEinstein;
  CHECK_THROWS_AS(soliton_residual(k.spec.metric, k.spec.eta, k.curvature.ricci,
                                   k.curvature.scalar, k.derivatives.lie_xi_metric, params),
                  SpecError);
}

TEST_CASE("solve on kenmotsu3 with p = -2/3") {
  const auto k = kenmotsu3();
  const auto result = solve_soliton_constants(
      k.spec.metric, k.spec.eta, k.spec.xi, k.curvature.ricci, k.curvature.scalar,
      k.derivatives.lie_xi_metric, Rational(-2, 3), SolitonVariant::ConformalEtaEinstein);
  const auto& sol = std::get<SolitonSolution>(result);
  CHECK(sol.parameters.lambda == Rational(-2));
  CHECK(sol.parameters.mu == Rational(1));
  CHECK(sol.residual.is_zero());
  CHECK(sol.scalar_relation_holds);
}

TEST_CASE("solve on kenmotsu3 with p = 0") {
  const auto k = kenmotsu3();
  const auto result = solve_soliton_constants(
      k.spec.metric, k.spec.eta, k.spec.xi, k.curvature.ricci, k.curvature.scalar,
      k.derivatives.lie_xi_metric, Rational(0), SolitonVariant::ConformalEtaEinstein);
  const auto& sol = std::get<SolitonSolution>(result);
  CHECK(sol.parameters.lambda == Rational(-7, 3));
  CHECK(sol.parameters.mu == Rational(1));
  CHECK(sol.scalar_relation_holds);
}

TEST_CASE("shifting p shifts lambda by half and leaves mu fixed") {
  const auto k = kenmotsu3();
  testgen::Rng rng(23);
  for (int t = 0; t < 8; ++t) {
    const Rational p = testgen::random_rational(rng, 6, 5);
    const auto result = solve_soliton_constants(
        k.spec.metric, k.spec.eta, k.spec.xi, k.curvature.ricci, k.curvature.scalar,
        k.derivatives.lie_xi_metric, p, SolitonVariant::ConformalEtaEinstein);
    const auto& sol = std::get<SolitonSolution>(result);
    CHECK(sol.parameters.mu == Rational(1));
    CHECK(sol.parameters.lambda == Rational(-2) - (p + Rational(2, 3)) / Rational(2));
    CHECK(sol.scalar_relation_holds);
  }
}

TEST_CASE("forcing mu = 0 on kenmotsu3 is infeasible with the (3,3) witness") {
  const auto k = kenmotsu3();
  const auto result = solve_soliton_constants(
      k.spec.metric, k.spec.eta, k.spec.xi, k.curvature.ricci, k.curvature.scalar,
      k.derivatives.lie_xi_metric, Rational(-2, 3), SolitonVariant::ConformalEinstein);
  const auto& cert = std::get<InfeasibilityCertificate>(result);
  CHECK(cert.slot_i == 3);
  CHECK(cert.slot_j == 3);
  CHECK(cert.value == Rational(-2));
}

TEST_CASE("eta-einstein variant drops the conformal term") {
  const auto k = kenmotsu3();
  const auto result = solve_soliton_constants(k.spec.metric, k.spec.eta, k.spec.xi,
                                              k.curvature.ricci, k.curvature.scalar,
                                              k.derivatives.lie_xi_metric, std::nullopt,
                                              SolitonVariant::EtaEinstein);
  const auto& sol = std::get<SolitonSolution>(result);
  CHECK(sol.parameters.lambda == Rational(-2));
  CHECK(sol.parameters.mu == Rational(1));
  CHECK(sol.scalar_relation_holds);
}

TEST_CASE("flat control admits a solution with mu = 0 but fails the scalar relation") {
  const auto f = flat3();
  const auto result = solve_soliton_constants(
      f.spec.metric, f.spec.eta, f.spec.xi, f.curvature.ricci, f.curvature.scalar,
      f.derivatives.lie_xi_metric, Rational(1), SolitonVariant::ConformalEtaEinstein);
  const auto& sol = std::get<SolitonSolution>(result);
  CHECK(sol.parameters.lambda == Rational(-5, 6)); // -(p + 2/3)/2
  CHECK(sol.parameters.mu == Rational(0));
  CHECK(sol.residual.is_zero());
  CHECK(!sol.scalar_relation_holds); // r = 0 but the relation needs -4
}

TEST_CASE("scalar relation on frozen tuples") {
  CHECK(check_scalar_relation(3, Rational(-2, 3), Rational(-2), Rational(1), Rational(-6)));
  CHECK(!check_scalar_relation(3, Rational(-2, 3), Rational(0), Rational(0), Rational(-6)));
  CHECK(check_scalar_relation(3, Rational(0), Rational(-7, 3), Rational(1), Rational(-6)));
}

TEST_CASE("eta-einstein decomposition") {
  const auto k = kenmotsu3();

  SUBCASE("kenmotsu3 is einstein: a = -2, b = 0") {
    const auto d = eta_einstein_decompose(k.curvature.ricci, k.spec.metric, k.spec.eta);
    REQUIRE(d.decomposable());
    CHECK(d.coefficients->first == Rational(-2));
    CHECK(d.coefficients->second == Rational(0));
  }

  SUBCASE("synthetic S = -3g + eta (x) eta") {
    Bilinear02 s = k.spec.metric;
    s.scale(Rational(-3));
    s += outer(k.spec.eta, k.spec.eta);
    const auto d = eta_einstein_decompose(s, k.spec.metric, k.spec.eta);
    REQUIRE(d.decomposable());
    CHECK(d.coefficients->first == Rational(-3));
    CHECK(d.coefficients->second == Rational(1));
  }

  SUBCASE("an off-diagonal ricci entry defeats the decomposition at (1,2)") {
    Bilinear02 s = k.curvature.ricci;
    s.at(0, 1) = Rational(1);
    const auto d = eta_einstein_decompose(s, k.spec.metric, k.spec.eta);
    REQUIRE(!d.decomposable());
    CHECK(*d.witness == std::pair{1, 2});
  }
}

TEST_CASE("classification of kenmotsu3 at the solved parameters") {
  const auto k = kenmotsu3();
  const auto result = solve_soliton_constants(
      k.spec.metric, k.spec.eta, k.spec.xi, k.curvature.ricci, k.curvature.scalar,
      k.derivatives.lie_xi_metric, Rational(-2, 3), SolitonVariant::ConformalEtaEinstein);
  const auto& sol = std::get<SolitonSolution>(result);
  const auto report = classify(k.spec, k.gamma, k.curvature, k.derivatives, sol);

  CHECK(report.ricci_symmetric);
  CHECK(!report.eta_recurrent);
  CHECK(report.eta_recurrent_witness == std::vector<int>{3, 1, 1});
  CHECK(report.cyclic_parallel);
  CHECK(report.recurrence == RicciRecurrence::ParallelNotRecurrent);
  CHECK(!report.recurrence_form.has_value());

  Bilinear02 minus_two_g = k.spec.metric;
  minus_two_g.scale(Rational(-2));
  CHECK(report.h == minus_two_g);
  CHECK(report.nabla_h_zero);
  CHECK(report.h_xi_xi == Rational(-2));
  CHECK(report.d_eta_zero);
  CHECK(report.all_applicable_hold());

  for (const auto& check : report.consequence_checks) {
    if (check.id == "eta-recurrent-scalar" || check.id == "ricci-recurrent-scalar") {
      CHECK(!check.applicable);
    } else {
      CHECK(check.applicable);
      CHECK(check.holds);
    }
  }
}

TEST_CASE("a recurrent synthetic derivative structure is detected with its 1-form") {
  const auto k = kenmotsu3();
  // Engineer nabla S = A (x) S with A = eta: feed the classifier a fake
  // derivative package whose nabla_ricci is eta_i S_jk.
  auto derivatives = k.derivatives;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int kk = 0; kk < 3; ++kk) {
        derivatives.nabla_ricci.at(i, j, kk) = k.spec.eta[i] * k.curvature.ricci.at(j, kk);
      }
  const auto result = solve_soliton_constants(
      k.spec.metric, k.spec.eta, k.spec.xi, k.curvature.ricci, k.curvature.scalar,
      k.derivatives.lie_xi_metric, Rational(-2, 3), SolitonVariant::ConformalEtaEinstein);
  const auto& sol = std::get<SolitonSolution>(result);
  const auto report = classify(k.spec, k.gamma, k.curvature, derivatives, sol);
  CHECK(report.eta_recurrent);
  CHECK(report.recurrence == RicciRecurrence::Recurrent);
  REQUIRE(report.recurrence_form.has_value());
  CHECK(*report.recurrence_form == k.spec.eta);

  // breaking one slot defeats eta-recurrence with that witness
  derivatives.nabla_ricci.at(2, 1, 1) += Rational(1);
  const auto broken = classify(k.spec, k.gamma, k.curvature, derivatives, sol);
  CHECK(!broken.eta_recurrent);
  CHECK(broken.eta_recurrent_witness == std::vector<int>{3, 2, 2});
  CHECK(broken.recurrence == RicciRecurrence::NotRecurrent);
}

TEST_CASE("zero ricci makes recurrence undefined") {
  const auto f = flat3();
  const auto result = solve_soliton_constants(
      f.spec.metric, f.spec.eta, f.spec.xi, f.curvature.ricci, f.curvature.scalar,
      f.derivatives.lie_xi_metric, Rational(0), SolitonVariant::ConformalEtaEinstein);
  const auto& sol = std::get<SolitonSolution>(result);
  const auto report = classify(f.spec, f.gamma, f.curvature, f.derivatives, sol);
  CHECK(report.recurrence == RicciRecurrence::Undefined);
  CHECK(report.ricci_symmetric);
  CHECK(report.cyclic_parallel);
}

TEST_CASE("parallel tensor reconstruction on kenmotsu3") {
  const auto k = kenmotsu3();

  SUBCASE("mu = 1: h is parallel, proportional, and rebuilds the soliton") {
    const auto report = parallel_tensor_reconstruct(k.spec, k.gamma, k.curvature, Rational(1));
    CHECK(report.nabla_h_zero);
    Bilinear02 minus_two_g = k.spec.metric;
    minus_two_g.scale(Rational(-2));
    CHECK(report.h == minus_two_g);
    CHECK(report.h_xi_xi == Rational(-2));
    CHECK(report.xi_slot_proportional);
    CHECK(report.proportional_to_metric);
    CHECK(report.reconstructed_residual_zero);
  }

  SUBCASE("mu = 0: h = diag(-2,-2,-4) is not proportional to the metric") {
    const auto report = parallel_tensor_reconstruct(k.spec, k.gamma, k.curvature, Rational(0));
    Bilinear02 expected(3);
    expected.at(0, 0) = -2;
    expected.at(1, 1) = -2;
    expected.at(2, 2) = -4;
    CHECK(report.h == expected);
    CHECK(!report.nabla_h_zero);
    CHECK(report.h_xi_xi == Rational(-4));
    CHECK(report.xi_slot_proportional); // h(Y,xi) = eta(Y) h(xi,xi) still holds
    CHECK(!report.proportional_to_metric);
    CHECK(*report.proportional_witness == std::pair{1, 1});
    CHECK(!report.reconstructed_residual_zero);
  }

  SUBCASE("flat control with mu = 0: h = 0 is trivially parallel") {
    const auto f = flat3();
    const auto report = parallel_tensor_reconstruct(f.spec, f.gamma, f.curvature, Rational(0));
    CHECK(report.h.is_zero());
    CHECK(report.nabla_h_zero);
    CHECK(report.h_xi_xi == Rational(0));
    CHECK(report.proportional_to_metric);
    CHECK(report.reconstructed_residual_zero);
  }
}

TEST_CASE("solver succeeds on synthetic decomposable inputs") {
  testgen::Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    const int n = (t % 2 == 0) ? 3 : 5;
    // random SPD metric rescaled so that g(xi, xi) = 1 for a random xi
    FrameVector xi(n);
    while (xi.is_zero()) xi = testgen::random_vector(rng, n);
    Bilinear02 g = testgen::random_spd_metric(rng, n);
    const Rational norm = g.apply(xi, xi);
    g.scale(Rational(1) / norm);
    const OneForm eta = eta_from_xi(g, xi);

    // synthetic Kenmotsu-shaped lie derivative and decomposable ricci
    Bilinear02 lie = g;
    lie += Rational(-1) * outer(eta, eta);
    lie.scale(Rational(2));
    const Rational a = testgen::random_rational(rng);
    const Rational b = testgen::random_rational(rng);
    Bilinear02 ricci = g;
    ricci.scale(a);
    Bilinear02 etaterm = outer(eta, eta);
    etaterm.scale(b);
    ricci += etaterm;
    // r = trace(G^{-1} S) via the cofactor oracle
    const RationalMatrix ginv = oracle::inverse_cramer(RationalMatrix::from_bilinear(g));
    Rational r;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r += ginv.at(i, j) * ricci.at(i, j);

    const Rational p = testgen::random_rational(rng);
    const auto result = solve_soliton_constants(g, eta, xi, ricci, r, lie, p,
                                                SolitonVariant::ConformalEtaEinstein);
    REQUIRE(std::holds_alternative<SolitonSolution>(result));
    const auto& sol = std::get<SolitonSolution>(result);
    CHECK(sol.residual.is_zero());

    const auto d = eta_einstein_decompose(ricci, g, eta);
    REQUIRE(d.decomposable());
    CHECK(d.coefficients->first == a);
    CHECK(d.coefficients->second == b);
  }
}
