#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace wtits {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: element expressions, index sets, config files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A structural self-check failed (group axioms, order antisymmetry,
/// disagreement between the two down-set routes, ...).
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

/// The requested computation is not available for this group.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace wtits
