#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

// Every failure the library reports is one of these. The kind names mirror
// the mathematical reason a computation could not proceed.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QCAT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

QCAT_DEFINE_ERROR(NotUniserial)
QCAT_DEFINE_ERROR(NotACocycle)
QCAT_DEFINE_ERROR(NoComplement)
QCAT_DEFINE_ERROR(DivNotDivisible)
QCAT_DEFINE_ERROR(PrecisionTooLow)
QCAT_DEFINE_ERROR(PrecisionUnstable)
QCAT_DEFINE_ERROR(NotMapped)
QCAT_DEFINE_ERROR(NotAMorphism)
QCAT_DEFINE_ERROR(BelowX0)
QCAT_DEFINE_ERROR(CapExceeded)
QCAT_DEFINE_ERROR(InvalidData)

#undef QCAT_DEFINE_ERROR

}  // namespace qcat
