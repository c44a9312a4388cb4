#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracle.hpp"

#include "framegeo/linalg.hpp"

using namespace framegeo;

namespace {

RationalMatrix make_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

Bilinear02 make_bilinear(std::initializer_list<std::initializer_list<int>> rows) {
  Bilinear02 t(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) t.at(i, j++) = v;
    ++i;
  }
  return t;
}

} // namespace

TEST_CASE("identity system solves trivially") {
  const auto result = solve_linear_exact(RationalMatrix::identity(2), {Rational(3), Rational(-1)});
  const auto& sol = std::get<LinearSolution>(result);
  CHECK(sol.x == std::vector<Rational>{Rational(3), Rational(-1)});
  CHECK(!sol.underdetermined);
}

TEST_CASE("inconsistent rows yield the infeasible certificate") {
  const auto result =
      solve_linear_exact(make_matrix({{1, 1}, {1, 1}}), {Rational(1), Rational(2)});
  const auto& cert = std::get<LinearInfeasible>(result);
  CHECK(cert.row == 1);
  CHECK(!cert.mismatch.is_zero());
}

TEST_CASE("overdetermined consistent system recovers the soliton constants") {
  // The (lambda, mu) system read off the kenmotsu3 residual at the slots
  // (e1,e1), (e3,e3)-(e1,e1) and (xi,xi).
  const auto result = solve_linear_exact(make_matrix({{2, 0}, {0, 2}, {2, 2}}),
                                         {Rational(-4), Rational(2), Rational(-2)});
  const auto& sol = std::get<LinearSolution>(result);
  CHECK(sol.x == std::vector<Rational>{Rational(-2), Rational(1)});
  CHECK(!sol.underdetermined);
}

TEST_CASE("rank-deficient but consistent systems return one solution plus the flag") {
  const auto result = solve_linear_exact(make_matrix({{1, 1}}), {Rational(2)});
  const auto& sol = std::get<LinearSolution>(result);
  CHECK(sol.underdetermined);
  CHECK(sol.x[0] + sol.x[1] == Rational(2));

  const auto square = solve_linear_exact(make_matrix({{1, 1}, {2, 2}}), {Rational(2), Rational(4)});
  CHECK(std::get<LinearSolution>(square).underdetermined);
}

TEST_CASE("spd_check on hand matrices") {
  CHECK(!spd_check(Bilinear02::identity(3)));

  const auto degenerate = spd_check(make_bilinear({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
  REQUIRE(degenerate.has_value());
  CHECK(degenerate->minor_order == 3);
  CHECK(degenerate->minor_value == Rational(0));

  // minors 2 and 3 by direct expansion
  CHECK(!spd_check(make_bilinear({{2, 1}, {1, 2}})));
  CHECK(determinant(make_matrix({{2, 1}, {1, 2}})) == Rational(3));

  const auto asym = spd_check(make_bilinear({{1, 2}, {0, 1}}));
  REQUIRE(asym.has_value());
  REQUIRE(asym->asymmetric_at.has_value());
  CHECK(*asym->asymmetric_at == std::pair{0, 1});

  const auto indefinite = spd_check(make_bilinear({{-1, 0}, {0, 1}}));
  REQUIRE(indefinite.has_value());
  CHECK(indefinite->minor_order == 1);
}

TEST_CASE("determinant and inverse agree with the cofactor oracle") {
  testgen::Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const RationalMatrix m = testgen::random_matrix(rng, 4, 4, 3);
    CHECK(determinant(m) == oracle::determinant_laplace(m));
  }
  for (int t = 0; t < 25; ++t) {
    const RationalMatrix m = testgen::random_invertible(rng, 3);
    const RationalMatrix inv = inverse(m);
    const RationalMatrix expected = oracle::inverse_cramer(m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(inv.at(i, j) == expected.at(i, j));
  }
}

TEST_CASE("solve round-trips A x for random full-column-rank systems") {
  testgen::Rng rng(11);
  int full_rank_seen = 0;
  for (int t = 0; t < 120; ++t) {
    const int k = 2 + static_cast<int>(t % 3);
    const int m = k + static_cast<int>(t % 2);
    const RationalMatrix a = testgen::random_matrix(rng, m, k, 3);
    std::vector<Rational> x(k);
    for (auto& v : x) v = testgen::random_rational(rng);
    std::vector<Rational> b(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < k; ++j) b[i] += a.at(i, j) * x[j];
    }
    const auto result = solve_linear_exact(a, b);
    REQUIRE(std::holds_alternative<LinearSolution>(result));
    const auto& sol = std::get<LinearSolution>(result);
    // Any returned solution must reproduce b; with full column rank it is x itself.
    for (int i = 0; i < m; ++i) {
      Rational lhs;
      for (int j = 0; j < k; ++j) lhs += a.at(i, j) * sol.x[j];
      CHECK(lhs == b[i]);
    }
    if (!sol.underdetermined) {
      ++full_rank_seen;
      CHECK(sol.x == x);
    }
  }
  CHECK(full_rank_seen > 50);
}

TEST_CASE("spd metrics are positive on random nonzero vectors") {
  testgen::Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const Bilinear02 g = testgen::random_spd_metric(rng, 3);
    REQUIRE(!spd_check(g));
    int checked = 0;
    while (checked < 100) {
      const FrameVector v = testgen::random_vector(rng, 3);
      if (v.is_zero()) continue;
      CHECK(g.apply(v, v) > Rational(0));
      ++checked;
    }
  }
}
