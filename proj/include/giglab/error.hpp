#pragma once

#include <stdexcept>
#include <string>

namespace giglab {

// An exhaustive operation would exceed the configured size guard.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed literal, file or document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unsupported export format.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Circuit isomorphism requested across different global signs.
struct SignMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Circuit isomorphism requested across different sizes.
struct SizeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Layer index outside the valid layer set of a circuit.
struct InvalidLayerError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace giglab
