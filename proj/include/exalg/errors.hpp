#pragma once

#include <stdexcept>
#include <string>

namespace exalg {

// Base class for all failures raised by the library.  Anything mathematical
// that goes wrong (bad divisor, mismatched contexts, a self-check tripping)
// derives from this; plain std::logic_error is reserved for programmer error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define EXALG_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                              \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    }

EXALG_DEFINE_ERROR(DivisionByZero);
EXALG_DEFINE_ERROR(FieldMismatch);
EXALG_DEFINE_ERROR(AmbientMismatch);
EXALG_DEFINE_ERROR(SingularGram);
EXALG_DEFINE_ERROR(NotScalarMultiple);
EXALG_DEFINE_ERROR(ReadbackMismatch);
EXALG_DEFINE_ERROR(NotInvertible);
EXALG_DEFINE_ERROR(InvalidMultiplier);
EXALG_DEFINE_ERROR(NotRankOne);
EXALG_DEFINE_ERROR(SamplerDegenerate);
EXALG_DEFINE_ERROR(ContextMismatch);
EXALG_DEFINE_ERROR(NotSkewSpan);
EXALG_DEFINE_ERROR(VariantMismatch);
EXALG_DEFINE_ERROR(NotSimilarity);
EXALG_DEFINE_ERROR(NotFixed);
EXALG_DEFINE_ERROR(CriteriaDisagree);
EXALG_DEFINE_ERROR(Unclassified);
EXALG_DEFINE_ERROR(ParseError);
EXALG_DEFINE_ERROR(DimensionMismatch);
EXALG_DEFINE_ERROR(SelfCheckFailed);

#undef EXALG_DEFINE_ERROR

} // namespace exalg
