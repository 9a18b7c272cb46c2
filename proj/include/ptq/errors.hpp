#pragma once

#include <stdexcept>
#include <string>

namespace ptq {

// Requested a normalized object for a state with n >= q.
class NonNormalizableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A phase-space or group-coordinate point outside the branch an operation
// is defined on (wrong energy sign, |sin(omega tau)| leaving the principal
// patch, ...).
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ptq
