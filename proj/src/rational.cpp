#include "framegeo/rational.hpp"

#include <cctype>

namespace framegeo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// GMP reads a leading 0 as a base prefix; keep plain decimal semantics.
std::string_view strip_leading_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

} // namespace

bool Rational::is_valid_literal(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return all_digits(text);
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  // A zero denominator is a parse error, not a division-by-zero event.
  return all_digits(num) && all_digits(den) && den.find_first_not_of('0') != std::string_view::npos;
}

Rational Rational::parse(std::string_view text) {
  if (!is_valid_literal(text)) {
    throw ArithmeticError("not a rational literal: \"" + std::string(text) + "\"");
  }
  bool negative = false;
  if (text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string num(strip_leading_zeros(
      slash == std::string_view::npos ? text : text.substr(0, slash)));
  BigInt numerator(num);
  if (negative) numerator = -numerator;
  if (slash == std::string_view::npos) return Rational(numerator);
  return Rational(numerator, BigInt(std::string(strip_leading_zeros(text.substr(slash + 1)))));
}

} // namespace framegeo
