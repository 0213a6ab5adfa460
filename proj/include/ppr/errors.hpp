#ifndef PPR_ERRORS_HPP
#define PPR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ppr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed arguments or data handed to an operation.
class InvalidInputError : public Error {
public:
  using Error::Error;
};

/// Inputs outside the mathematical domain of an operation (T <= 0, log of
/// a non-positive argument, negative energy parameter).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Inconsistent or incomplete model configuration (group tables, overrides).
class ConfigurationError : public Error {
public:
  using Error::Error;
};

/// The state has no physically meaningful answer (no physical cubic root,
/// phase split collapsing onto the trivial solution).
class DegenerateStateError : public Error {
public:
  using Error::Error;
};

/// An iterative scheme ran out of iterations.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// A bisection bracket that does not straddle the sought boundary.
class BracketError : public Error {
public:
  using Error::Error;
};

/// Every point of a cost evaluation failed; the cost has no value.
class CostUndefinedError : public Error {
public:
  using Error::Error;
};

/// Text input that failed to parse; carries a 1-based location.
class ParseError : public InvalidInputError {
public:
  ParseError(const std::string& msg, int line, int column)
      : InvalidInputError(msg + " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace ppr

#endif
