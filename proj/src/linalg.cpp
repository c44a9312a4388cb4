#include "framegeo/linalg.hpp"

#include <numeric>

#include "framegeo/errors.hpp"

namespace framegeo {

LinearSolveResult solve_linear_exact(const RationalMatrix& a,
                                     const std::vector<Rational>& b) {
  const int m = a.rows();
  const int k = a.cols();
  if (m < 1 || k < 1 || static_cast<int>(b.size()) != m) {
    throw EngineError("solve_linear_exact: malformed system");
  }

  RationalMatrix aug(m, k + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, k) = b[i];
  }
  std::vector<int> original_row(m);
  std::iota(original_row.begin(), original_row.end(), 0);

  // Forward pass: Bareiss update (x*pivot - y*z)/prev keeps entries as
  // scaled minors of the input system.
  std::vector<int> pivot_col_of_row;
  Rational prev_pivot = 1;
  int pr = 0;
  for (int c = 0; c < k && pr < m; ++c) {
    int pivot_row = -1;
    for (int i = pr; i < m; ++i) {
      if (!aug.at(i, c).is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue; // free column
    if (pivot_row != pr) {
      aug.swap_rows(pr, pivot_row);
      std::swap(original_row[pr], original_row[pivot_row]);
    }
    const Rational pivot = aug.at(pr, c);
    for (int i = pr + 1; i < m; ++i) {
      for (int j = c + 1; j <= k; ++j) {
        aug.at(i, j) = (aug.at(i, j) * pivot - aug.at(i, c) * aug.at(pr, j)) / prev_pivot;
      }
      aug.at(i, c) = 0;
    }
    prev_pivot = pivot;
    pivot_col_of_row.push_back(c);
    ++pr;
  }

  for (int i = pr; i < m; ++i) {
    if (!aug.at(i, k).is_zero()) {
      return LinearInfeasible{original_row[i], aug.at(i, k)};
    }
  }

  LinearSolution sol;
  sol.x.assign(k, Rational(0));
  sol.underdetermined = pr < k;
  for (int r = pr - 1; r >= 0; --r) {
    const int c = pivot_col_of_row[r];
    Rational rhs = aug.at(r, k);
    for (int j = c + 1; j < k; ++j) rhs -= aug.at(r, j) * sol.x[j];
    sol.x[c] = rhs / aug.at(r, c);
  }
  return sol;
}

Rational determinant(RationalMatrix m) {
  const int n = m.rows();
  if (n != m.cols()) throw EngineError("determinant: matrix not square");
  int sign = 1;
  Rational prev = 1;
  for (int c = 0; c < n - 1; ++c) {
    int pivot_row = -1;
    for (int i = c; i < n; ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) return Rational(0);
    if (pivot_row != c) {
      m.swap_rows(c, pivot_row);
      sign = -sign;
    }
    const Rational pivot = m.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * pivot - m.at(i, c) * m.at(c, j)) / prev;
      }
      m.at(i, c) = 0;
    }
    prev = pivot;
  }
  // After k Bareiss steps the trailing diagonal entry is the full minor.
  return sign < 0 ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

RationalMatrix inverse(const RationalMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw EngineError("inverse: matrix not square");
  RationalMatrix work = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot_row = -1;
    for (int i = c; i < n; ++i) {
      if (!work.at(i, c).is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) throw EngineError("inverse: singular matrix");
    if (pivot_row != c) {
      work.swap_rows(c, pivot_row);
      inv.swap_rows(c, pivot_row);
    }
    const Rational pivot = work.at(c, c);
    for (int j = 0; j < n; ++j) {
      work.at(c, j) /= pivot;
      inv.at(c, j) /= pivot;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || work.at(i, c).is_zero()) continue;
      const Rational f = work.at(i, c);
      for (int j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

std::optional<SpdFailure> spd_check(const Bilinear02& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.at(i, j) != g.at(j, i)) {
        SpdFailure f;
        f.asymmetric_at = {i, j};
        return f;
      }
    }
  }
  // Bareiss without pivoting: after k steps the (k,k) entry equals the
  // (k+1)-st leading principal minor, so Sylvester reads straight off the
  // diagonal. No breakdown can occur while the previous minors are > 0.
  RationalMatrix m = RationalMatrix::from_bilinear(g);
  Rational prev = 1;
  for (int c = 0; c < n; ++c) {
    const Rational minor = m.at(c, c);
    if (minor.sign() <= 0) {
      SpdFailure f;
      f.minor_order = c + 1;
      f.minor_value = minor;
      return f;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * minor - m.at(i, c) * m.at(c, j)) / prev;
      }
      m.at(i, c) = 0;
    }
    prev = minor;
  }
  return std::nullopt;
}

} // namespace framegeo
