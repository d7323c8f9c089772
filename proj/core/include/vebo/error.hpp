#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace vebo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An input referenced a vertex ID outside [0, n).
class OutOfRange : public Error {
 public:
  OutOfRange(std::string what, std::size_t index, std::uint64_t value)
      : Error(std::move(what)), index_(index), value_(value) {}

  // Position of the offending item in its input sequence.
  std::size_t index() const noexcept { return index_; }
  std::uint64_t value() const noexcept { return value_; }

 private:
  std::size_t index_;
  std::uint64_t value_;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kBadToken,
  kCountMismatch,
  kNonMonotonicOffsets,
  kTargetOutOfRange,
  kIo,
};

const char* to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  // 1-based; 0 when the error is not tied to a line (e.g. unreadable file).
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

}  // namespace vebo
