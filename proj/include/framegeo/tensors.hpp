#ifndef FRAMEGEO_TENSORS_HPP
#define FRAMEGEO_TENSORS_HPP

#include <vector>

#include "framegeo/errors.hpp"
#include "framegeo/rational.hpp"

namespace framegeo {

// Dense frame-tensor containers. Dimensions are tiny (odd n, typically 3
// or 5), so everything is stored densely and indexed 0-based internally.
// Reports and documents use the 1-based frame labels e_1..e_n.

/// Components of a vector field in the fixed frame e_1..e_n.
class FrameVector {
public:
  FrameVector() = default;
  explicit FrameVector(int n) : m_n(n), m_c(n) {}
  FrameVector(std::initializer_list<Rational> init)
      : m_n(static_cast<int>(init.size())), m_c(init) {}

  int dim() const { return m_n; }
  const Rational& operator[](int a) const { return m_c[a]; }
  Rational& operator[](int a) { return m_c[a]; }

  bool is_zero() const {
    for (const auto& v : m_c)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const FrameVector& a, const FrameVector& b) {
    return a.m_c == b.m_c;
  }

private:
  int m_n = 0;
  std::vector<Rational> m_c;
};

/// Components of a 1-form on the frame.
class OneForm {
public:
  OneForm() = default;
  explicit OneForm(int n) : m_n(n), m_c(n) {}
  OneForm(std::initializer_list<Rational> init)
      : m_n(static_cast<int>(init.size())), m_c(init) {}

  int dim() const { return m_n; }
  const Rational& operator[](int a) const { return m_c[a]; }
  Rational& operator[](int a) { return m_c[a]; }

  Rational apply(const FrameVector& x) const {
    Rational s;
    for (int a = 0; a < m_n; ++a) s += m_c[a] * x[a];
    return s;
  }

  bool is_zero() const {
    for (const auto& v : m_c)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const OneForm& a, const OneForm& b) { return a.m_c == b.m_c; }

private:
  int m_n = 0;
  std::vector<Rational> m_c;
};

/// (0,2) tensor: at(i,j) = T(e_i, e_j). Symmetry is a property of the
/// housed tensor, not of the container; call is_symmetric() where the
/// tensor demands it.
class Bilinear02 {
public:
  Bilinear02() = default;
  explicit Bilinear02(int n) : m_n(n), m_c(static_cast<size_t>(n) * n) {}

  static Bilinear02 identity(int n) {
    Bilinear02 t(n);
    for (int a = 0; a < n; ++a) t.at(a, a) = 1;
    return t;
  }

  int dim() const { return m_n; }
  const Rational& at(int i, int j) const { return m_c[idx(i, j)]; }
  Rational& at(int i, int j) { return m_c[idx(i, j)]; }

  /// T(x, y) for constant-component vector fields.
  Rational apply(const FrameVector& x, const FrameVector& y) const {
    Rational s;
    for (int i = 0; i < m_n; ++i)
      for (int j = 0; j < m_n; ++j) s += x[i] * at(i, j) * y[j];
    return s;
  }

  bool is_symmetric() const {
    for (int i = 0; i < m_n; ++i)
      for (int j = i + 1; j < m_n; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : m_c)
      if (!v.is_zero()) return false;
    return true;
  }

  Bilinear02& operator+=(const Bilinear02& o) {
    for (size_t k = 0; k < m_c.size(); ++k) m_c[k] += o.m_c[k];
    return *this;
  }

  Bilinear02& scale(const Rational& s) {
    for (auto& v : m_c) v *= s;
    return *this;
  }

  friend Bilinear02 operator+(Bilinear02 a, const Bilinear02& b) { return a += b; }

  friend Bilinear02 operator*(const Rational& s, Bilinear02 t) { return t.scale(s); }

  friend bool operator==(const Bilinear02& a, const Bilinear02& b) {
    return a.m_c == b.m_c;
  }

private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * m_n + j; }

  int m_n = 0;
  std::vector<Rational> m_c;
};

/// Rank-one product (alpha ⊗ beta)(X,Y) = alpha(X) beta(Y).
inline Bilinear02 outer(const OneForm& alpha, const OneForm& beta) {
  Bilinear02 t(alpha.dim());
  for (int i = 0; i < alpha.dim(); ++i)
    for (int j = 0; j < beta.dim(); ++j) t.at(i, j) = alpha[i] * beta[j];
  return t;
}

/// (1,1) tensor: at(a,b) = a-th frame component of the image of e_b.
class Endomorphism11 {
public:
  Endomorphism11() = default;
  explicit Endomorphism11(int n) : m_n(n), m_c(static_cast<size_t>(n) * n) {}

  int dim() const { return m_n; }
  const Rational& at(int a, int b) const { return m_c[idx(a, b)]; }
  Rational& at(int a, int b) { return m_c[idx(a, b)]; }

  FrameVector apply(const FrameVector& x) const {
    FrameVector y(m_n);
    for (int a = 0; a < m_n; ++a)
      for (int b = 0; b < m_n; ++b) y[a] += at(a, b) * x[b];
    return y;
  }

  /// Image of the b-th frame vector.
  FrameVector column(int b) const {
    FrameVector y(m_n);
    for (int a = 0; a < m_n; ++a) y[a] = at(a, b);
    return y;
  }

  friend bool operator==(const Endomorphism11& a, const Endomorphism11& b) {
    return a.m_c == b.m_c;
  }

private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a) * m_n + b; }

  int m_n = 0;
  std::vector<Rational> m_c;
};

/// (0,3) tensor with index order (direction, slot1, slot2):
/// at(i,j,k) = (D_{e_i} T)(e_j, e_k) for the derivative tensors it houses.
class Tensor03 {
public:
  Tensor03() = default;
  explicit Tensor03(int n) : m_n(n), m_c(static_cast<size_t>(n) * n * n) {}

  int dim() const { return m_n; }
  const Rational& at(int i, int j, int k) const { return m_c[idx(i, j, k)]; }
  Rational& at(int i, int j, int k) { return m_c[idx(i, j, k)]; }

  bool is_zero() const {
    for (const auto& v : m_c)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Tensor03& a, const Tensor03& b) { return a.m_c == b.m_c; }

private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * m_n + j) * m_n + k;
  }

  int m_n = 0;
  std::vector<Rational> m_c;
};

/// (1,3) curvature-shaped tensor: comp(l,i,j,k) is the e_l-component of
/// R(e_i, e_j) e_k. Antisymmetric in (i,j) for every curvature it houses.
class Tensor13 {
public:
  Tensor13() = default;
  explicit Tensor13(int n) : m_n(n), m_c(static_cast<size_t>(n) * n * n * n) {}

  int dim() const { return m_n; }
  const Rational& comp(int l, int i, int j, int k) const { return m_c[idx(l, i, j, k)]; }
  Rational& comp(int l, int i, int j, int k) { return m_c[idx(l, i, j, k)]; }

  /// R(e_i, e_j) e_k as a frame vector.
  FrameVector apply(int i, int j, int k) const {
    FrameVector v(m_n);
    for (int l = 0; l < m_n; ++l) v[l] = comp(l, i, j, k);
    return v;
  }

  friend bool operator==(const Tensor13& a, const Tensor13& b) { return a.m_c == b.m_c; }

private:
  size_t idx(int l, int i, int j, int k) const {
    return ((static_cast<size_t>(l) * m_n + i) * m_n + j) * m_n + k;
  }

  int m_n = 0;
  std::vector<Rational> m_c;
};

} // namespace framegeo

#endif
