#pragma once

#include <stdexcept>
#include <string>

namespace pentagon {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A mathematical property that was asked about does not hold.
/// The CLI maps these to exit code 1.
class MathError : public Error {
public:
    using Error::Error;
};

/// A theorem-guaranteed identity failed on a validated object. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

#define PENTAGON_DEFINE_ERROR(Name, Base)                                      \
    class Name : public Base {                                                 \
    public:                                                                    \
        explicit Name(const std::string& what) : Base(#Name ": " + what) {}    \
    }

PENTAGON_DEFINE_ERROR(ParseError, InputError);
PENTAGON_DEFINE_ERROR(BadField, InputError);
PENTAGON_DEFINE_ERROR(ShapeError, InputError);
PENTAGON_DEFINE_ERROR(ShapeMismatch, InputError);
PENTAGON_DEFINE_ERROR(FieldMismatch, InputError);
PENTAGON_DEFINE_ERROR(ZeroTensor, InputError);
PENTAGON_DEFINE_ERROR(BadParams, InputError);

PENTAGON_DEFINE_ERROR(NotInvertible, MathError);
PENTAGON_DEFINE_ERROR(NotInSpan, MathError);
PENTAGON_DEFINE_ERROR(DependentBasis, MathError);
PENTAGON_DEFINE_ERROR(PentagonFails, MathError);
PENTAGON_DEFINE_ERROR(NotInvariant, MathError);
PENTAGON_DEFINE_ERROR(AxiomsFail, MathError);
PENTAGON_DEFINE_ERROR(RepNotBijective, MathError);

PENTAGON_DEFINE_ERROR(UnitarityFails, InternalError);
PENTAGON_DEFINE_ERROR(GammaOutsideSpan, InternalError);
PENTAGON_DEFINE_ERROR(BoundViolated, InternalError);
PENTAGON_DEFINE_ERROR(ClosureViolation, InternalError);
PENTAGON_DEFINE_ERROR(InverseFails, InternalError);

#undef PENTAGON_DEFINE_ERROR

}  // namespace pentagon
