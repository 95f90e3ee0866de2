#ifndef TRACEZERO_ERRORS_HPP
#define TRACEZERO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tracezero {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct NotIrreducible : Error {
    using Error::Error;
};

struct PointNotOnCurve : Error {
    PointNotOnCurve() : Error("point does not satisfy the curve equation") {}
};

struct SingularCurve : Error {
    SingularCurve() : Error("singular curve: 4A^3 + 27B^2 = 0") {}
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct NotPrimeOrder : Error {
    using Error::Error;
};

struct NotTraceZero : Error {
    NotTraceZero() : Error("point is not in the trace-zero subgroup") {}
};

struct DegenerateConjugates : Error {
    DegenerateConjugates() : Error("Frobenius conjugate shares the x-coordinate") {}
};

struct InvalidLine : Error {
    using Error::Error;
};

struct IdentityInput : Error {
    IdentityInput() : Error("identity line where a proper line is required") {}
};

struct DegenerateDoubling : Error {
    DegenerateDoubling() : Error("doubling denominator vanished") {}
};

struct DegenerateTripling : Error {
    DegenerateTripling() : Error("tripling denominator vanished") {}
};

struct SingularSystem : Error {
    using Error::Error;
};

struct NoCandidate : Error {
    using Error::Error;
};

struct InvalidScalar : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace tracezero

#endif
