#pragma once

#include <stdexcept>
#include <string>

namespace g4 {

// A cost guard refused the operation (caller may force or downsize).
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Group-order search could not pin a unique count within its retry budget.
struct count_ambiguity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace g4
