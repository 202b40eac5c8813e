#ifndef BETHE_ERRORS_HPP
#define BETHE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bethe {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BETHE_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

// ratcore
BETHE_DEFINE_ERROR(DivisionByZero);
BETHE_DEFINE_ERROR(NonInjectiveRename);
BETHE_DEFINE_ERROR(ResultingZeroDenominator);
BETHE_DEFINE_ERROR(HigherOrderPole);
BETHE_DEFINE_ERROR(Unevaluable);
BETHE_DEFINE_ERROR(CapacityExceeded);
BETHE_DEFINE_ERROR(ParseError);

// symmetrize / series
BETHE_DEFINE_ERROR(IndexOutOfBound);
BETHE_DEFINE_ERROR(RankMismatch);
BETHE_DEFINE_ERROR(GroupTooLarge);

// strings / tableaux / gl2
BETHE_DEFINE_ERROR(LengthMismatch);
BETHE_DEFINE_ERROR(InadmissibleIndex);
BETHE_DEFINE_ERROR(WeightNotAdmissible);
BETHE_DEFINE_ERROR(SizeGuardExceeded);
BETHE_DEFINE_ERROR(SpanMismatch);
BETHE_DEFINE_ERROR(BoundExceeded);

// cli
BETHE_DEFINE_ERROR(UnknownTask);
BETHE_DEFINE_ERROR(GuardExceeded);

#undef BETHE_DEFINE_ERROR

}  // namespace bethe

#endif  // BETHE_ERRORS_HPP
