#ifndef SGH_ERROR_HPP_
#define SGH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sgh {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multiplication-table validation.
struct NotAssociative : Error {
  int a, b, c;  // witness triple with (a*b)*c != a*(b*c)
  NotAssociative(int a_, int b_, int c_)
      : Error("table is not associative at triple (" + std::to_string(a_)
              + ", " + std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};

struct EntryOutOfRange : Error {
  using Error::Error;
};

struct BadIdentityHint : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct NotAMonoid : Error {
  using Error::Error;
};

struct TooManyVariables : Error {
  using Error::Error;
};

struct OrderTooLarge : Error {
  using Error::Error;
};

// Group utilities.
struct NotAGroup : Error {
  using Error::Error;
};

struct ElementOutsideGroup : Error {
  using Error::Error;
};

// Minimal-ideal structure.
struct StructureVerificationFailed : Error {
  using Error::Error;
};

// Exact integer linear algebra.
struct NotInLattice : Error {
  using Error::Error;
};

struct NotAComplex : Error {
  using Error::Error;
};

// Resolution engine and nerve complex.
struct ResourceCapExceeded : Error {
  using Error::Error;
};

struct DimensionCapExceeded : Error {
  using Error::Error;
};

}  // namespace sgh

#endif  // SGH_ERROR_HPP_
