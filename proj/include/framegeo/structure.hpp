#ifndef FRAMEGEO_STRUCTURE_HPP
#define FRAMEGEO_STRUCTURE_HPP

#include <vector>

#include "framegeo/rational.hpp"
#include "framegeo/tensors.hpp"

namespace framegeo {

/// Constant structure constants of the frame: [e_i, e_j] = sum_k c^k_ij e_k.
/// Entries are stored sparsely for i < j only; antisymmetry in (i,j) is
/// implied by the storage convention. All indices 0-based here.
class StructureConstants {
public:
  struct Entry {
    int i, j, k;
    Rational value;
  };

  StructureConstants() = default;
  explicit StructureConstants(int n) : m_n(n) {}

  int dim() const { return m_n; }
  const std::vector<Entry>& entries() const { return m_entries; }

  /// Add c^k_ij = v for i < j. Zero values are dropped, duplicates merged.
  void set(int i, int j, int k, const Rational& v);

  /// c^k_ij with the implied antisymmetry applied; 0 when unset.
  Rational coeff(int i, int j, int k) const;

  /// [e_i, e_j] as a frame vector.
  FrameVector bracket(int i, int j) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b);

private:
  void sort_entries();

  int m_n = 0;
  std::vector<Entry> m_entries; // sorted by (i,j,k), i < j, nonzero values
};

struct JacobiViolation {
  int i, j, l, k; // cyclic triple (i,j,l), output component k; 0-based
  Rational sum;
};

/// Exhaustive Jacobi identity check over all index triples. An empty
/// result means the constants define a Lie bracket.
std::vector<JacobiViolation> jacobi_check(const StructureConstants& c);

} // namespace framegeo

#endif
