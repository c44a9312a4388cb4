#include <doctest.h>

#include "generators.hpp"
#include "oracle.hpp"

#include "framegeo/structure.hpp"

using namespace framegeo;

TEST_CASE("coeff applies antisymmetry to the sparse storage") {
  StructureConstants c(3);
  c.set(0, 2, 0, Rational(1));
  CHECK(c.coeff(0, 2, 0) == Rational(1));
  CHECK(c.coeff(2, 0, 0) == Rational(-1));
  CHECK(c.coeff(0, 0, 0) == Rational(0));
  CHECK(c.coeff(0, 1, 0) == Rational(0));

  const FrameVector br = c.bracket(0, 2);
  CHECK(br[0] == Rational(1));
  CHECK(br[1].is_zero());
  CHECK(br[2].is_zero());
}

TEST_CASE("jacobi passes on the warped-product and abelian brackets") {
  StructureConstants warped(3);
  warped.set(0, 2, 0, Rational(1)); // [e1,e3] = e1
  warped.set(1, 2, 1, Rational(1)); // [e2,e3] = e2
  CHECK(jacobi_check(warped).empty());
  CHECK(oracle::jacobi_holds_all_triples(warped));

  CHECK(jacobi_check(StructureConstants(3)).empty());
}

TEST_CASE("jacobi violation detected and matches the all-triples oracle") {
  StructureConstants bad(3);
  bad.set(0, 1, 0, Rational(1)); // [e1,e2] = e1
  bad.set(0, 2, 1, Rational(1)); // [e1,e3] = e2
  const auto violations = jacobi_check(bad);
  CHECK(!violations.empty());
  CHECK(!oracle::jacobi_holds_all_triples(bad));
  // the reported slot really has a nonzero cyclic sum
  const auto& v = violations.front();
  Rational sum;
  for (int m = 0; m < 3; ++m) {
    sum += bad.coeff(v.i, v.j, m) * bad.coeff(m, v.l, v.k);
    sum += bad.coeff(v.j, v.l, m) * bad.coeff(m, v.i, v.k);
    sum += bad.coeff(v.l, v.i, m) * bad.coeff(m, v.j, v.k);
  }
  CHECK(sum == v.sum);
  CHECK(!sum.is_zero());
}

TEST_CASE("generated random Lie algebras always satisfy jacobi") {
  testgen::Rng rng(17);
  for (int t = 0; t < 40; ++t) {
    const int n = (t % 2 == 0) ? 3 : 5;
    const StructureConstants c = testgen::random_lie_algebra(rng, n);
    CHECK(jacobi_check(c).empty());
    CHECK(oracle::jacobi_holds_all_triples(c));
  }
}
