#pragma once

#include <stdexcept>
#include <string>

namespace cotlsa {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define COTLSA_DEFINE_ERROR(Name)                                 \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : Error(what) {}   \
    }

COTLSA_DEFINE_ERROR(DivisionByZero);
COTLSA_DEFINE_ERROR(NonSquareMatrix);
COTLSA_DEFINE_ERROR(DimensionMismatch);
COTLSA_DEFINE_ERROR(SizeTooSmall);
COTLSA_DEFINE_ERROR(ConditionViolation);
COTLSA_DEFINE_ERROR(AxiomsNotVerified);
COTLSA_DEFINE_ERROR(IntegerLambda);
COTLSA_DEFINE_ERROR(ZeroLambdaI);
COTLSA_DEFINE_ERROR(Degenerate);
COTLSA_DEFINE_ERROR(NotClosed);
COTLSA_DEFINE_ERROR(ParseError);

#undef COTLSA_DEFINE_ERROR

}  // namespace cotlsa
