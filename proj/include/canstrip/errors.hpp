#pragma once

#include <stdexcept>
#include <string>

namespace canstrip {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exactpoly
struct InsufficientPoints : Error { using Error::Error; };
struct DegreeOverflow : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };

// verlinde
struct InvalidGenus : Error { using Error::Error; };
struct NonIntegerResult : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };

// constructions
struct DimensionMismatch : Error { using Error::Error; };
struct SymmetryViolation : Error { using Error::Error; };

// roots / hypotheses
struct NonConvergence : Error { using Error::Error; };
struct Indeterminate : Error { using Error::Error; };

// polytopes
struct NotFullDimensional : Error { using Error::Error; };
struct OriginNotInterior : Error { using Error::Error; };

// input handling
struct ParseError : Error { using Error::Error; };

}  // namespace canstrip
