#pragma once

#include <stdexcept>
#include <string>

namespace muldep {

// Bad arguments: zero where nonzero required, malformed rationals, invalid
// bound inputs. CLI maps this to exit code 2.
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A scan or search was asked to run on inputs that violate a theorem
// hypothesis and no override was given. CLI exit code 3.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration or height caps exceeded. CLI exit code 4.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace muldep
