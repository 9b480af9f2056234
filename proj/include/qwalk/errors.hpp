#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

// A run was refused because it would exceed a configured resource budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical invariant (trace / normalization) broke beyond tolerance.
// Treated as a bug signal, never silently ignored.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
