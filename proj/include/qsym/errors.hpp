#ifndef QSYM_ERRORS_HPP
#define QSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsym {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file or string. `where` is a JSON-path-like locator
// ("$.edges[3].source") or a byte offset for syntax errors.
class ParseError : public Error {
public:
  ParseError(const std::string& where, const std::string& msg)
      : Error(where + ": " + msg), where_(where) {}
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

// Precondition violation (invalid graph passed to an op that requires a
// valid one, dimension mismatch, degree bound too low, ...).
class InvalidArgument : public Error {
public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// The saturation engine hit its resource cap. Distinct from a mathematical
// failure: the computation was cut short, nothing is known either way.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::size_t tracked, std::size_t budget)
      : Error("word budget exceeded: " + std::to_string(tracked) + " > " +
              std::to_string(budget)),
        tracked_(tracked), budget_(budget) {}
  std::size_t tracked() const { return tracked_; }
  std::size_t budget() const { return budget_; }

private:
  std::size_t tracked_;
  std::size_t budget_;
};

// Engine bug trap: an internal cross-check failed. Never expected to fire.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace qsym

#endif
