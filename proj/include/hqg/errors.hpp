#ifndef HQG_ERRORS_HPP
#define HQG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hqg {

/// Base of every error raised by the library. Verdicts (a property failing on
/// a valid input) are never reported through exceptions.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define HQG_DEFINE_ERROR(Name)            \
    class Name : public Error {           \
       public:                            \
        using Error::Error;               \
    }

HQG_DEFINE_ERROR(DivisionByZero);
HQG_DEFINE_ERROR(FieldMismatch);
HQG_DEFINE_ERROR(DimensionMismatch);
HQG_DEFINE_ERROR(NotInvertible);
HQG_DEFINE_ERROR(FormatError);
HQG_DEFINE_ERROR(NoIdentity);
HQG_DEFINE_ERROR(IndexOutOfRange);
HQG_DEFINE_ERROR(NotALoop);
HQG_DEFINE_ERROR(NotAGroup);
HQG_DEFINE_ERROR(NotIPLoop);
HQG_DEFINE_ERROR(NotBijective);
HQG_DEFINE_ERROR(NoAntipodeExtractable);
HQG_DEFINE_ERROR(PreconditionViolated);
HQG_DEFINE_ERROR(BaseMismatch);
HQG_DEFINE_ERROR(MorphismInvalid);
HQG_DEFINE_ERROR(IOError);

#undef HQG_DEFINE_ERROR

}  // namespace hqg

#endif
