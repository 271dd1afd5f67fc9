#ifndef HFE_ERRORS_HPP
#define HFE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hfe {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different fields (or have the wrong length).
struct FieldMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

// The linear system A x = b has no solution.
struct InconsistentSystemError : Error {
    using Error::Error;
};

// A polynomial violates the required exponent shape (weight bound,
// q-power structure, ...).
struct ShapeError : Error {
    using Error::Error;
};

// An internal consistency check failed; indicates a bug or corrupted input.
struct VerificationError : Error {
    using Error::Error;
};

// The interpolation system stayed rank deficient after all available points.
struct RankDeficientError : Error {
    using Error::Error;
};

// A bilinear matrix was expected to be alternating (zero diagonal).
struct NotAlternatingError : Error {
    using Error::Error;
};

// A dense polynomial exceeds the configured degree guard.
struct DegreeGuardError : Error {
    using Error::Error;
};

// Exhaustive enumeration over the field was requested but the field is
// too large (p^n > 2^24).
struct EnumerationGuardError : Error {
    using Error::Error;
};

}  // namespace hfe

#endif
