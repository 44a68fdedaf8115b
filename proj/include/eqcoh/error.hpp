#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqcoh {

// Precondition violated (bad divisor, non-actual rep where one is needed, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Degree lies outside the range a closed-form computation covers.
class SectorError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace eqcoh
