#include "framegeo/structure.hpp"

#include <algorithm>
#include <tuple>

#include "framegeo/errors.hpp"

namespace framegeo {

void StructureConstants::set(int i, int j, int k, const Rational& v) {
  if (i < 0 || j < 0 || k < 0 || i >= m_n || j >= m_n || k >= m_n || i >= j) {
    throw EngineError("structure constants: bad index triple");
  }
  for (auto it = m_entries.begin(); it != m_entries.end(); ++it) {
    if (it->i == i && it->j == j && it->k == k) {
      if (v.is_zero()) {
        m_entries.erase(it);
      } else {
        it->value = v;
      }
      return;
    }
  }
  if (!v.is_zero()) {
    m_entries.push_back({i, j, k, v});
    sort_entries();
  }
}

void StructureConstants::sort_entries() {
  std::sort(m_entries.begin(), m_entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
}

Rational StructureConstants::coeff(int i, int j, int k) const {
  if (i == j) return 0;
  const bool flip = i > j;
  if (flip) std::swap(i, j);
  for (const auto& e : m_entries) {
    if (e.i == i && e.j == j && e.k == k) return flip ? -e.value : e.value;
  }
  return 0;
}

FrameVector StructureConstants::bracket(int i, int j) const {
  FrameVector v(m_n);
  for (int k = 0; k < m_n; ++k) v[k] = coeff(i, j, k);
  return v;
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
  if (a.m_n != b.m_n || a.m_entries.size() != b.m_entries.size()) return false;
  for (size_t t = 0; t < a.m_entries.size(); ++t) {
    const auto& x = a.m_entries[t];
    const auto& y = b.m_entries[t];
    if (std::tie(x.i, x.j, x.k) != std::tie(y.i, y.j, y.k) || x.value != y.value) {
      return false;
    }
  }
  return true;
}

std::vector<JacobiViolation> jacobi_check(const StructureConstants& c) {
  const int n = c.dim();
  std::vector<JacobiViolation> violations;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        for (int k = 0; k < n; ++k) {
          Rational sum;
          for (int m = 0; m < n; ++m) {
            sum += c.coeff(i, j, m) * c.coeff(m, l, k);
            sum += c.coeff(j, l, m) * c.coeff(m, i, k);
            sum += c.coeff(l, i, m) * c.coeff(m, j, k);
          }
          if (!sum.is_zero()) violations.push_back({i, j, l, k, sum});
        }
      }
    }
  }
  return violations;
}

} // namespace framegeo
