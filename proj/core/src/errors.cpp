#include "gsp4h/errors.hpp"

namespace gsp4h {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::VariantMismatch: return "VariantMismatch";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegreeLimit: return "DegreeLimit";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::InvalidData: return "InvalidData";
    case ErrorKind::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorKind::NotALine: return "NotALine";
    case ErrorKind::LedgerInconsistent: return "LedgerInconsistent";
    case ErrorKind::InvalidIndexSet: return "InvalidIndexSet";
    case ErrorKind::InconsistentData: return "InconsistentData";
  }
  return "Unknown";
}

}  // namespace gsp4h
