#ifndef LATGEO_ERRORS_HPP
#define LATGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latgeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LATGEO_DEFINE_ERROR(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// Geometry preconditions.
LATGEO_DEFINE_ERROR(DegenerateInput);
LATGEO_DEFINE_ERROR(OriginNotInterior);
LATGEO_DEFINE_ERROR(SingularMap);
LATGEO_DEFINE_ERROR(DegenerateFacet);
LATGEO_DEFINE_ERROR(NotSymmetric);
LATGEO_DEFINE_ERROR(DimensionTooLarge);

// Numerics.
LATGEO_DEFINE_ERROR(ToleranceNotReached);

// Descent.
LATGEO_DEFINE_ERROR(NotUnavoidable);
LATGEO_DEFINE_ERROR(EnumerationFailed);
LATGEO_DEFINE_ERROR(StepBudgetExceeded);
LATGEO_DEFINE_ERROR(InvariantViolation);

// Flat tori.
LATGEO_DEFINE_ERROR(NotReversible);
LATGEO_DEFINE_ERROR(UnsupportedLattice);

// I/O.
LATGEO_DEFINE_ERROR(ParseError);
LATGEO_DEFINE_ERROR(ConvexityError);
LATGEO_DEFINE_ERROR(ConstraintUnsatisfiable);
LATGEO_DEFINE_ERROR(IoError);

#undef LATGEO_DEFINE_ERROR

}  // namespace latgeo

#endif  // LATGEO_ERRORS_HPP
