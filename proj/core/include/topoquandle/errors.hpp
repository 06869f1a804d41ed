#pragma once

#include <stdexcept>
#include <string>

namespace tq {

/// Base class for every error thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structure failed axiom validation (quandle axioms, quasi-order axioms,
/// compatibility). The message names the first violated axiom and the
/// lexicographically smallest witness.
struct validation_error : error {
    using error::error;
};

/// Two operands live on different ground sets where the same set was required.
struct ground_mismatch : error {
    using error::error;
};

/// Two operands share labels where disjoint ground sets were required.
struct ground_overlap : error {
    using error::error;
};

/// A size cap on an enumeration or canonicalization was exceeded.
struct cap_exceeded : error {
    using error::error;
};

/// Malformed textual or JSON input.
struct parse_error : error {
    using error::error;
};

/// A tensor word does not have the shape an operation requires.
struct shape_error : error {
    using error::error;
};

} // namespace tq
