#pragma once

#include <stdexcept>
#include <string>

namespace toraut {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input or a violated operation precondition.
struct input_error : error {
    using error::error;
};

// Ray count above the permutation-enumeration cap.
struct cap_exceeded : error {
    using error::error;
};

} // namespace toraut
