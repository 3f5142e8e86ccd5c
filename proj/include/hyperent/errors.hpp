#pragma once

#include <stdexcept>
#include <string>

namespace hyperent {

// Base class for all errors thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input: malformed hypergraph, vertex out of range, bad parameters.
struct validation_error : error {
    using error::error;
};

// Instance exceeds a configured size cap; the message names the cap and,
// where available, the size that was requested.
struct budget_error : error {
    using error::error;
};

}  // namespace hyperent
