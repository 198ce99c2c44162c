#pragma once

#include <stdexcept>
#include <string>

namespace mflab {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// parameter/dimension/invariant problems exit with code 1,
// size/resolution/accuracy (budget) problems with code 2.

struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resolution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct accuracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace mflab
