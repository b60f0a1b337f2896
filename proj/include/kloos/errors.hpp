// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_ERRORS_HPP
#define KLOOS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kloos {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KLOOS_DEFINE_ERROR(Name)      \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

KLOOS_DEFINE_ERROR(InvalidPrime);
KLOOS_DEFINE_ERROR(InvalidArgument);
KLOOS_DEFINE_ERROR(ZeroInverse);
KLOOS_DEFINE_ERROR(DistinctnessViolation);
KLOOS_DEFINE_ERROR(PrimeTooLarge);
KLOOS_DEFINE_ERROR(CensusMismatch);
KLOOS_DEFINE_ERROR(OrthogonalityFailure);
KLOOS_DEFINE_ERROR(MagicViolation);
KLOOS_DEFINE_ERROR(NonIntegerCoefficient);
KLOOS_DEFINE_ERROR(NoConvergence);
KLOOS_DEFINE_ERROR(BadVariantPrime);
KLOOS_DEFINE_ERROR(RegularityViolation);
KLOOS_DEFINE_ERROR(NotRegular);

#undef KLOOS_DEFINE_ERROR

}  // namespace kloos

#endif  // KLOOS_ERRORS_HPP
