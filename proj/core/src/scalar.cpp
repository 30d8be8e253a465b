#include "gsp4h/scalar.hpp"

#include "gsp4h/errors.hpp"

namespace gsp4h {

namespace {

template <class F>
F apply(const F& x, const F& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div:
      if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
      return x / y;
  }
  throw Error(ErrorKind::InvalidData, "unknown operation");
}

}  // namespace

Scalar field_arith(const Scalar& x, const Scalar& y, ArithOp op) {
  if (x.index() != y.index())
    throw Error(ErrorKind::VariantMismatch, "cannot mix rational and rational-function scalars");
  if (const auto* rx = std::get_if<Rational>(&x)) return apply(*rx, std::get<Rational>(y), op);
  return apply(std::get<RatFunc>(x), std::get<RatFunc>(y), op);
}

bool is_zero(const Scalar& x) {
  return std::visit([](const auto& v) { return v.is_zero(); }, x);
}

std::string to_string(const Scalar& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

Scalar parse_scalar(std::string_view s, bool symbolic) {
  if (symbolic) return RatFunc::parse(s);
  return Rational::parse(s);
}

}  // namespace gsp4h
