#pragma once

#include <stdexcept>
#include <string>

namespace bpc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define BPC_DEFINE_ERROR(Name)                          \
    struct Name : Error {                               \
        explicit Name(const std::string& msg = #Name)   \
            : Error(msg) {}                             \
    }

BPC_DEFINE_ERROR(NotBooleanSpectrum);
BPC_DEFINE_ERROR(NotBent);
BPC_DEFINE_ERROR(NotPlateaued);
BPC_DEFINE_ERROR(BadCoordinate);
BPC_DEFINE_ERROR(ZeroDirection);
BPC_DEFINE_ERROR(SingularMatrix);
BPC_DEFINE_ERROR(DimensionMismatch);
BPC_DEFINE_ERROR(SearchExhausted);
BPC_DEFINE_ERROR(IndexOutOfRange);
BPC_DEFINE_ERROR(NotPlateauedOnFace);
BPC_DEFINE_ERROR(SumMismatch);
BPC_DEFINE_ERROR(MalformedStream);
BPC_DEFINE_ERROR(BadRadius);
BPC_DEFINE_ERROR(OutOfRange);
BPC_DEFINE_ERROR(ParityMismatch);
BPC_DEFINE_ERROR(TooLarge);
BPC_DEFINE_ERROR(NotBijective);
BPC_DEFINE_ERROR(EmptyRegion);
BPC_DEFINE_ERROR(BadFormat);

#undef BPC_DEFINE_ERROR

}  // namespace bpc
