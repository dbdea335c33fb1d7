#pragma once

#include <stdexcept>
#include <string>

namespace msc {

// Thrown when a caller violates a documented precondition that the callee
// checks (e.g. Sturm counting on a non-square-free polynomial).
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Thrown when an input is structurally valid but outside the supported
// problem class (e.g. degree computation with a non-simple condition).
struct UnsupportedProblem : std::invalid_argument {
  explicit UnsupportedProblem(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace msc
