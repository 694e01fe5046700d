#pragma once

#include <stdexcept>
#include <string>

namespace donsw {

/// Stored data violates a structural invariant (bad gram matrix, broken
/// conjugation symmetry, ...). Raised while constructing values.
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated hypotheses. The message names
/// the violated condition.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// External input (JSON, class spec, flag value) could not be parsed.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace donsw
