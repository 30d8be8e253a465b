#pragma once

#include <stdexcept>
#include <string>

namespace gsp4h {

enum class ErrorKind {
  DivisionByZero,
  VariantMismatch,
  ZeroArgument,
  ParseError,
  DegreeLimit,
  NotSymplectic,
  ConstraintViolated,
  InvalidData,
  DegenerateIntersection,
  NotALine,
  LedgerInconsistent,
  InvalidIndexSet,
  InconsistentData,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gsp4h
