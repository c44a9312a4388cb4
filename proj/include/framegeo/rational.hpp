#ifndef FRAMEGEO_RATIONAL_HPP
#define FRAMEGEO_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <ostream>
#include <string>
#include <string_view>

#include "framegeo/errors.hpp"

namespace framegeo {

using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational scalar.
///
/// The only scalar type used by the engine. Values are always held in
/// lowest terms with a positive denominator, and every operation is
/// exact: there is no rounding anywhere, so identities that hold
/// mathematically hold bit-for-bit. Division by zero throws
/// ArithmeticError instead of invoking GMP's undefined behaviour.
class Rational {
public:
  Rational() : m_v(0) {}
  Rational(int v) : m_v(v) {}
  Rational(long long v) : m_v(static_cast<long>(v)) {}
  Rational(const BigInt& v) : m_v(v) {}

  Rational(long long num, long long den)
      : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ArithmeticError("division by zero: denominator is 0");
    // Dividing two integer-valued rationals canonicalizes sign and gcd.
    m_v = boost::multiprecision::mpq_rational(num) /
          boost::multiprecision::mpq_rational(den);
  }

  /// Parse "a", "-a" or "a/b" with decimal digits and b > 0 after sign
  /// normalization. Anything else (floats, whitespace, signs on the
  /// denominator) is rejected.
  static Rational parse(std::string_view text);

  /// True if `text` satisfies the grammar accepted by parse().
  static bool is_valid_literal(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(m_v); }
  BigInt denominator() const { return boost::multiprecision::denominator(m_v); }

  bool is_zero() const { return m_v == 0; }
  int sign() const { return m_v.sign(); }

  /// Canonical text form: "a/b" in lowest terms, or just "a" when b = 1.
  std::string str() const {
    const BigInt den = denominator();
    std::string s = numerator().str();
    if (den != 1) {
      s += '/';
      s += den.str();
    }
    return s;
  }

  Rational operator-() const { return Rational(m_v * -1); }

  Rational& operator+=(const Rational& o) { m_v += o.m_v; return *this; }
  Rational& operator-=(const Rational& o) { m_v -= o.m_v; return *this; }
  Rational& operator*=(const Rational& o) { m_v *= o.m_v; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    m_v /= o.m_v;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.m_v == b.m_v; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.m_v != b.m_v; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.m_v < b.m_v; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.m_v <= b.m_v; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.m_v > b.m_v; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.m_v >= b.m_v; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  explicit Rational(boost::multiprecision::mpq_rational v) : m_v(std::move(v)) {}

  boost::multiprecision::mpq_rational m_v;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace framegeo

#endif
