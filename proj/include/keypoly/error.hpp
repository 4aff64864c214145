#pragma once

#include <stdexcept>
#include <string>

namespace keypoly {

// Base class for every exception thrown by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input data: malformed partitions or permutations, fillings that are not
// semistandard, mismatched shapes, cells outside the shape.
struct validation_error : error {
    using error::error;
};

// A configured resource limit was exceeded, e.g. the generator frame cap or
// an integer overflow in coefficient arithmetic.
struct limit_error : error {
    using error::error;
};

// A broken internal invariant. Seeing this exception means a bug in the
// library, not bad input; the message carries enough context to reproduce.
struct internal_error : error {
    using error::error;
};

} // namespace keypoly
