#pragma once

#include <stdexcept>
#include <string>

namespace gsetca {

// Base of every exception thrown by the library. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GSETCA_DEFINE_ERROR(Name)                 \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    }

GSETCA_DEFINE_ERROR(ParseError);
GSETCA_DEFINE_ERROR(ValidationError);
GSETCA_DEFINE_ERROR(MembershipError);
GSETCA_DEFINE_ERROR(QuiescenceError);
GSETCA_DEFINE_ERROR(UnknownSymbol);
GSETCA_DEFINE_ERROR(TooLarge);
GSETCA_DEFINE_ERROR(NotAStabilizer);
GSETCA_DEFINE_ERROR(IncompatibleStateSets);
GSETCA_DEFINE_ERROR(ToleranceCollision);
GSETCA_DEFINE_ERROR(UnknownCell);

#undef GSETCA_DEFINE_ERROR

} // namespace gsetca
