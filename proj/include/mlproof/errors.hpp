#pragma once

#include <stdexcept>
#include <string>

namespace mlproof {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed surface syntax (formulas, sequents, proof files).
struct ParseError : Error {
  ParseError(std::size_t position, std::string expected_, const std::string& what)
      : Error(what), position(position), expected(std::move(expected_)) {}
  std::size_t position;
  std::string expected;
};

// Premises/metadata cannot instantiate the requested rule schema.
struct SchemaMismatch : Error {
  using Error::Error;
};

// Eigenvariable of forall:right / exists:left occurs free in the conclusion.
struct EigenvariableViolation : SchemaMismatch {
  using SchemaMismatch::SchemaMismatch;
};

// A documented operation precondition does not hold.
struct PreconditionViolation : Error {
  using Error::Error;
};

// Proof uses rules or initial sequents outside what the operation supports.
struct UnsupportedProfile : Error {
  using Error::Error;
};

// reduce_principal applied to a cut whose premises do not both introduce the cut formula.
struct NotPrincipal : Error {
  using Error::Error;
};

// Broken internal invariant (termination measure, degree contract, ...).
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace mlproof
