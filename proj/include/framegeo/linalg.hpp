#ifndef FRAMEGEO_LINALG_HPP
#define FRAMEGEO_LINALG_HPP

#include <optional>
#include <variant>
#include <vector>

#include "framegeo/rational.hpp"
#include "framegeo/tensors.hpp"

namespace framegeo {

/// Dense rational matrix used by the exact solvers. Row-major.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols)
      : m_rows(rows), m_cols(cols), m_c(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RationalMatrix from_bilinear(const Bilinear02& t) {
    RationalMatrix m(t.dim(), t.dim());
    for (int i = 0; i < t.dim(); ++i)
      for (int j = 0; j < t.dim(); ++j) m.at(i, j) = t.at(i, j);
    return m;
  }

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }
  const Rational& at(int i, int j) const { return m_c[idx(i, j)]; }
  Rational& at(int i, int j) { return m_c[idx(i, j)]; }

  void swap_rows(int a, int b) {
    for (int j = 0; j < m_cols; ++j) std::swap(at(a, j), at(b, j));
  }

private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * m_cols + j; }

  int m_rows = 0, m_cols = 0;
  std::vector<Rational> m_c;
};

struct LinearSolution {
  std::vector<Rational> x;
  /// True when the system is rank-deficient and x is just one member of
  /// the solution set (free variables pinned to zero).
  bool underdetermined = false;
};

/// Names the first row whose reduced form reads 0 = nonzero.
struct LinearInfeasible {
  int row = -1;
  Rational mismatch;
};

using LinearSolveResult = std::variant<LinearSolution, LinearInfeasible>;

/// Exact solve of A x = b for an m-by-k rational system.
///
/// Fraction-free (Bareiss) forward elimination keeps every intermediate
/// entry a scaled minor of the input, which bounds coefficient growth
/// compared with naive elimination. Inconsistent systems return the first
/// inconsistent pivot row; rank-deficient consistent systems return one
/// solution with the underdetermined flag set.
LinearSolveResult solve_linear_exact(const RationalMatrix& a,
                                     const std::vector<Rational>& b);

/// Exact determinant (fraction-free elimination).
Rational determinant(RationalMatrix m);

/// Exact inverse; throws EngineError if the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

struct SpdFailure {
  /// 1-based order of the violated leading principal minor, or 0 when the
  /// matrix is not symmetric.
  int minor_order = 0;
  /// Set when the failure is an asymmetric entry.
  std::optional<std::pair<int, int>> asymmetric_at;
  Rational minor_value;
};

/// Sylvester criterion, exact: symmetric and every leading principal
/// minor positive. Returns the failure witness otherwise.
std::optional<SpdFailure> spd_check(const Bilinear02& g);

} // namespace framegeo

#endif
