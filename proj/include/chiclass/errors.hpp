#pragma once

#include <stdexcept>
#include <string>

namespace chiclass {

// Precondition violated by a caller (bad weights, non-unit constant term, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A value that must be a polynomial in y still carries a (1+y) denominator.
// Raised by clear_denominator; never expected on a correct computation.
class NotPolynomial : public std::runtime_error {
 public:
  NotPolynomial(const std::string& what, std::string offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}

  const std::string& offending() const noexcept { return offending_; }

 private:
  std::string offending_;
};

// Malformed job input (schema violation, unparsable rational, ...).
class InputError : public std::runtime_error {
 public:
  InputError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace chiclass
