#ifndef STSOLVE_ERRORS_HPP
#define STSOLVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stsolve {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define STSOLVE_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                              \
    explicit Name(const std::string& msg = #Name) : Error(msg) {}    \
  }

STSOLVE_DEFINE_ERROR(ZeroInverse);
STSOLVE_DEFINE_ERROR(NotCoprime);
STSOLVE_DEFINE_ERROR(DivideByZeroPoly);
STSOLVE_DEFINE_ERROR(DegreeTooLarge);
STSOLVE_DEFINE_ERROR(RepeatedPoint);
STSOLVE_DEFINE_ERROR(DimensionMismatch);
STSOLVE_DEFINE_ERROR(NotSquare);
STSOLVE_DEFINE_ERROR(SingularInput);
STSOLVE_DEFINE_ERROR(NotInvertibleMod);
STSOLVE_DEFINE_ERROR(InvalidPoints);
STSOLVE_DEFINE_ERROR(FieldTooSmall);
STSOLVE_DEFINE_ERROR(ShiftOutOfRange);
STSOLVE_DEFINE_ERROR(SizeTooLarge);
STSOLVE_DEFINE_ERROR(BadModulus);
STSOLVE_DEFINE_ERROR(InternalError);

#undef STSOLVE_DEFINE_ERROR

}  // namespace stsolve

#endif
