#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cm {

/// Malformed input text (formula, KB, GCNF, family and solution files).
/// Line and column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// Message without the position prefix.
  const std::string &message() const { return message_; }

private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// A configured cap (oracle calls, brute-force size, variable count) was hit.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace cm
