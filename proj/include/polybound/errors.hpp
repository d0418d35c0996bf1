#pragma once

#include <stdexcept>

namespace polybound {

// Invalid parameters, malformed geometry, I/O problems. CLI maps this to exit 2.
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Failed brackets, non-convergent iterations. CLI maps this to exit 1.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace polybound
