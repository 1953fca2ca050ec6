#ifndef NILCX_ERRORS_HPP
#define NILCX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilcx {

/// Base class of every exception thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Substituting a value for the parameter hit a vanishing denominator.
struct PoleAtPoint : Error {
  explicit PoleAtPoint(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

/// Malformed tuple or bracket description.
struct SyntaxError : ParseError {
  SyntaxError(const std::string& what, std::size_t position)
      : ParseError(what, position) {}
};

struct DimensionTooLarge : Error {
  explicit DimensionTooLarge(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  DimensionMismatch() : Error("dimension mismatch") {}
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct AmbientMismatch : Error {
  explicit AmbientMismatch(const std::string& what) : Error(what) {}
};

/// A complex subspace without conjugation symmetry has no real form.
struct NotConjugationStable : Error {
  NotConjugationStable() : Error("subspace is not conjugation stable") {}
  explicit NotConjugationStable(const std::string& what) : Error(what) {}
};

struct JacobiFailure : Error {
  explicit JacobiFailure(const std::string& what) : Error(what) {}
};

struct NotNilpotent : Error {
  NotNilpotent() : Error("the algebra is not nilpotent") {}
  explicit NotNilpotent(const std::string& what) : Error(what) {}
};

struct NotAnIdeal : Error {
  NotAnIdeal() : Error("subspace is not an ideal") {}
  explicit NotAnIdeal(const std::string& what) : Error(what) {}
};

struct NotIntegrable : Error {
  NotIntegrable() : Error("structure is not integrable") {}
  explicit NotIntegrable(const std::string& what) : Error(what) {}
};

/// Two routes that must agree produced different answers; this always
/// indicates an implementation bug, never a legitimate mathematical state.
struct OracleDisagreement : Error {
  explicit OracleDisagreement(const std::string& what) : Error(what) {}
};

struct BadFiltration : Error {
  explicit BadFiltration(const std::string& what) : Error(what) {}
};

struct SamplerExhausted : Error {
  SamplerExhausted() : Error("sampler failed to produce a candidate") {}
  explicit SamplerExhausted(const std::string& what) : Error(what) {}
};

/// A precondition of a specialised routine does not hold for the input.
struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

struct UnknownEntry : Error {
  explicit UnknownEntry(const std::string& what) : Error(what) {}
};

struct FormatError : Error {
  explicit FormatError(const std::string& what) : Error(what) {}
};

}  // namespace nilcx

#endif
