#pragma once

#include <stdexcept>
#include <string>

namespace dcp {

// Argument outside the physical domain (z <= 0, negative intensity, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Evaluation exactly on a resonance of an undamped closed form.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Fixed-step integrator asked to run with a step coarser than its guard.
class ResolutionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace dcp
