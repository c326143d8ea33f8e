#pragma once

#include <stdexcept>
#include <string>

namespace toricc {

// Bad user-supplied data: unreadable files, malformed literals, bad flags.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was invoked outside its documented domain
// (non-smooth fan passed to intersection theory, guard exceeded, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An identity that must hold between two independent computations failed.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace toricc
