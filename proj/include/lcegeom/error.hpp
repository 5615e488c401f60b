#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcegeom {

enum class ErrorKind {
  CompositeModulus,
  DivisionByZero,
  NonSquare,
  BadIndex,
  BadParams,
  RankDeficient,
  DimensionMismatch,
  MultisetMismatch,
  SamplingExhausted,
  UndefinedInvariant,
  NoUsableInvariant,
  NotExpanded,
  ExpansionRefused,
  SearchSpaceTooLarge,
  ValidationFailed,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type;
// "no answer" outcomes (NoSolution, NotEquivalent, Undefined) are values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lcegeom
