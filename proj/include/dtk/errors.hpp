#pragma once

#include <stdexcept>
#include <string>

namespace dtk {

// Bad input data or configuration (schema violations, malformed files,
// invariant breaches). CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Failures outside the caller's control (I/O, transport). Exit code 2.
struct RuntimeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dtk
