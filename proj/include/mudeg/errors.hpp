#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mudeg {

/// Base class for every error raised deliberately by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (element count, subgroup count, coset count)
/// was exceeded. Not a statement about finiteness.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_cap, std::size_t limit, std::string detail)
      : Error(what_cap + " cap of " + std::to_string(limit) + " exceeded: " + detail),
        cap_name_(std::move(what_cap)),
        limit_(limit) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
};

/// Malformed group expression or presentation text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input whose parameters are invalid (e.g. p does not divide m).
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace mudeg
