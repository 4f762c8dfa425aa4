#pragma once

#include <stdexcept>
#include <string>

namespace necklace {

/// Malformed or inconsistent input (bad JSON, degree violations, mismatched
/// ground spaces, ...). The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural precondition of an operation failed (degenerate form where a
/// nondegenerate one is required, loop passed to an edge contraction, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace necklace
