#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subnorm {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input failed (x not in G, N not normal, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded, or an operation needs the element store.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace subnorm
