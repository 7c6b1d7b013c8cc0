#include "polyarith/error.hpp"

namespace polyarith {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResidueOutOfRange: return "ResidueOutOfRange";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::NoAritySolution: return "NoAritySolution";
    case ErrorKind::InadmissibleArity: return "InadmissibleArity";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NonAdmissibleWordLength: return "NonAdmissibleWordLength";
    case ErrorKind::InconsistentLengths: return "InconsistentLengths";
    case ErrorKind::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::CatalogTooLarge: return "CatalogTooLarge";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::TowerShapeMismatch: return "TowerShapeMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace polyarith
