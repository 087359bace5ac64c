#pragma once

#include <stdexcept>
#include <string>

namespace tlq {

// Base for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (schedule specs, probabilities, CSV).
struct ParseError : Error {
    using Error::Error;
};

// An operation was called outside its contract (e.g. phase_at on random
// lights, blocked engine on a pattern schedule).
struct ContractError : Error {
    using Error::Error;
};

// Numeric iteration failed to converge; maps to CLI exit code 2.
struct NonConvergenceError : Error {
    using Error::Error;
};

// Recognition failures (NoRelationFound, NoFactorization, NonRealBranch,
// NoIntegerFit, InsufficientPoints, NoRescaledFit); CLI exit code 3.
struct RecognitionError : Error {
    using Error::Error;
};

}  // namespace tlq
