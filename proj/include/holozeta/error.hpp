#pragma once

#include <stdexcept>
#include <string>

namespace holozeta {

// Input that is well-formed but mathematically unusable: degenerate
// polynomials, budget overruns, dependent vectors, and so on.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed polynomial text. `offset` is the byte offset of the problem.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : DomainError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class BudgetExceeded : public DomainError {
 public:
  BudgetExceeded(const std::string& what, double required)
      : DomainError(what), required_(required) {}
  double required() const { return required_; }

 private:
  double required_;
};

}  // namespace holozeta
