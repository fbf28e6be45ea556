#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dho {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  FieldTooLarge,
  MixedFields,
  DivisionByZero,
  NonDivisorDegree,
  DimensionMismatch,
  EnumerationTooLarge,
  NonCanonicalInput,
  KindMismatch,
  IncompatibleField,
  InvalidForm,
  DegeneratePolarity,
  NotAGenerator,
  HeterogeneousMembers,
  NotADualArc,
  OddRank,
  NotCoprime,
  InvalidBeta,
  DegenerateReferenceForm,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace dho
