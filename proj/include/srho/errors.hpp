#pragma once

#include <stdexcept>
#include <string>

namespace srho {

// Base of every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SRHO_DEFINE_ERROR(Name)          \
    class Name : public Error {          \
    public:                              \
        using Error::Error;              \
    }

SRHO_DEFINE_ERROR(ParameterError);     // family parameter outside its domain
SRHO_DEFINE_ERROR(GrowthLimitError);   // iterated line graph exceeded the order cap
SRHO_DEFINE_ERROR(IndexError);         // vertex id out of range
SRHO_DEFINE_ERROR(ArityError);         // H-join part count differs from pattern order
SRHO_DEFINE_ERROR(SizeError);          // input too large for an exact/exhaustive routine
SRHO_DEFINE_ERROR(SymmetryError);      // numeric eigensolver given a non-symmetric matrix
SRHO_DEFINE_ERROR(NumericFailure);     // Jacobi did not converge
SRHO_DEFINE_ERROR(ExactnessError);     // exact routine given non-integer entries
SRHO_DEFINE_ERROR(DomainError);        // e.g. root isolation on a constant polynomial
SRHO_DEFINE_ERROR(PartitionError);     // malformed vertex partition
SRHO_DEFINE_ERROR(EquitabilityError);  // partition is not equitable
SRHO_DEFINE_ERROR(StructureError);     // missing H-join structure / pattern mismatch
SRHO_DEFINE_ERROR(RegularityError);    // a part that must be regular is not
SRHO_DEFINE_ERROR(AvailabilityError);  // built-in table has no matching entry
SRHO_DEFINE_ERROR(ParseError);         // malformed graph6 or family text

#undef SRHO_DEFINE_ERROR

}  // namespace srho
