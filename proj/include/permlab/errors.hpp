#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

// Input lies outside an operation's mathematical domain (not doubly
// stochastic, entry sum != n, parameters breaking nonnegativity, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative scheme ran out of its iteration budget before reaching
// the requested tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A row or column sums to zero where a positive sum is required.
struct ZeroLineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The root-free polynomial precondition of a theorem does not hold for
// the given matrix; the theorem simply does not apply.
struct HypothesisFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed matrix / polynomial text or JSON input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace permlab
