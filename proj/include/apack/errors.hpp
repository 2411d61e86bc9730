#pragma once

#include <stdexcept>
#include <string>

namespace apack {

// Bad caller input: malformed files, ids out of range, violated preconditions.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation refused to run because it would exceed its budget.
// Budgeted routines either return an exact answer or throw; never a guess.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition the library promises did not hold. Always a bug.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace apack
