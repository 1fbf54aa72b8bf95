#pragma once

#include <stdexcept>
#include <string>

namespace gsp4 {

// Bad caller input: maps to CLI exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A consistency check inside the library fired; always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Division by zero, expansion at a pole, degenerate numeric instantiation.
struct SingularError : std::domain_error {
    using std::domain_error::domain_error;
};

// Quadrature or series failed to reach the requested accuracy.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gsp4
