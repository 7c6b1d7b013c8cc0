#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyarith {

enum class ErrorKind {
  ResidueOutOfRange,
  BadModulus,
  NotInClass,
  NoAritySolution,
  InadmissibleArity,
  ClassMismatch,
  ArityMismatch,
  NonAdmissibleWordLength,
  InconsistentLengths,
  DigitOutOfRange,
  InvalidBase,
  NotRepresentable,
  CatalogTooLarge,
  BaseMismatch,
  TowerShapeMismatch,
  LengthMismatch,
  InvalidArgument,
};

/// Stable name of the error kind, e.g. "NotRepresentable". Surfaced verbatim by the CLI.
std::string_view error_name(ErrorKind kind);

/// Domain error raised by every library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace polyarith
