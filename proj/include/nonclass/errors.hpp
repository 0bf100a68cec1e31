#pragma once

#include <stdexcept>
#include <string>

namespace nonclass {

// Shape or subsystem-dimension mismatch.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A matrix failed a density-operator (or unitary) invariant; the message
// names the violated invariant.
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested construction (e.g. a MUB family) is outside the supported set.
struct UnsupportedConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed form is undefined because the reduced state is degenerate
// (DQC1 with tau = 0); callers should fall back to the numeric path.
struct DegenerateReductionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nonclass
