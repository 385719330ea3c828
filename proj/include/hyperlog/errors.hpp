#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlog {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series evaluation hit its term cap before meeting the stopping rule.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial_value,
                   std::size_t terms)
      : std::runtime_error(what), partial_(partial_value), terms_(terms) {}

  double partial_value() const noexcept { return partial_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  double partial_;
  std::size_t terms_;
};

/// Root bracket without a sign change, or a bracket search that failed.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A user-supplied function returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double where)
      : std::runtime_error(what), where_(where) {}

  double where() const noexcept { return where_; }

 private:
  double where_;
};

/// Internal consistency check failed (e.g. piecewise branches disagree).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hyperlog
