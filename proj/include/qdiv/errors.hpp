#pragma once

#include <stdexcept>
#include <string>

namespace qdiv {

// Bad arguments from the caller. The CLI maps these to exit code 2.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : InvalidArgument {
    DivisionByZero() : InvalidArgument("division by zero in cyclotomic field") {}
};

struct LengthMismatch : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct AxisOutOfRange : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct DegreeOutOfRange : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct DegreeMismatch : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct ZeroVector : InvalidArgument {
    ZeroVector() : InvalidArgument("energy degree of the zero vector is undefined") {}
};

struct NotClosed : InvalidArgument {
    NotClosed() : InvalidArgument("subspace is not closed under the generator action") {}
};

// A structural identity that must hold did not. The CLI maps these to exit code 3.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace qdiv
