#pragma once

#include <stdexcept>
#include <string>

namespace chv {

// Error taxonomy shared by the whole library. Each type maps 1:1 onto a
// status code at the C boundary.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed group label (grammar violation).
struct ParseError : Error {
  using Error::Error;
};

// Well-formed label naming an inadmissible (family, rank, twist) combination.
struct InvalidSpec : Error {
  using Error::Error;
};

// q is not of the form p^s with p prime, s >= 1.
struct NotPrimePower : Error {
  using Error::Error;
};

// Field size incompatible with the twist (order-2 twists need an even
// exponent, the order-3 twist needs an exponent divisible by 3).
struct TwistFieldMismatch : Error {
  using Error::Error;
};

// A cyclotomic value expected to be rational has a nonzero omega part.
struct NotRational : Error {
  using Error::Error;
};

// A rational value expected to be a (positive) integer is not.
struct NonIntegral : Error {
  using Error::Error;
};

// Enumeration would exceed its work budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Orthogonal-group enumeration over a field of characteristic 2.
struct EvenCharacteristic : Error {
  using Error::Error;
};

// Parameter outside the supported domain (not one of the typed errors above).
struct BadArgument : Error {
  using Error::Error;
};

// A redundant internal cross-check failed; indicates a bug, not bad input.
struct InternalCheckFailure : Error {
  using Error::Error;
};

}  // namespace chv
