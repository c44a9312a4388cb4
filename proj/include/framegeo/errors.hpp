#ifndef FRAMEGEO_ERRORS_HPP
#define FRAMEGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace framegeo {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact arithmetic violation (currently only division by zero).
class ArithmeticError : public Error {
public:
  explicit ArithmeticError(const std::string& msg) : Error(msg) {}
};

/// Rejected input: schema violation or broken invariant in a manifold
/// document. `field()` names the offending field or invariant.
class SpecError : public Error {
public:
  SpecError(std::string field, const std::string& msg)
      : Error(field + ": " + msg), m_field(std::move(field)) {}

  const std::string& field() const { return m_field; }

private:
  std::string m_field;
};

/// Internal consistency check failed. This is a bug in the engine, not a
/// property of the input manifold; it is never reported as a check record.
class EngineError : public Error {
public:
  explicit EngineError(const std::string& msg) : Error(msg) {}
};

} // namespace framegeo

#endif
