#ifndef TRUNCIRC_ERRORS_HPP
#define TRUNCIRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace truncirc {

// Invalid input (size mismatch, non-state data, bad preconditions).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A numerical routine failed to reach its accuracy contract.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial roots drifted off the unit circle beyond repairable tolerance.
class ConditioningError : public NumericError {
public:
  ConditioningError(const std::string& what, double max_drift)
      : NumericError(what), max_drift(max_drift) {}
  double max_drift;
};

}  // namespace truncirc

#endif
