#pragma once

#include <stdexcept>
#include <string>

namespace abelian {

// Bad user-supplied parameter (CLI exit code 2).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inversion of zero in an exact field.
struct DivisionByZeroError : std::domain_error {
    DivisionByZeroError() : std::domain_error("division by zero") {}
};

// Request outside the supported problem sizes.
struct SizeGuardError : std::length_error {
    using std::length_error::length_error;
};

// Numeric tolerance could not be met (CLI exit code 4).
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal contract violation (mismatched moduli, non-skew pfaffian input, ...).
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace abelian
