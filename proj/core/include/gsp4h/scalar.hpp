#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "gsp4h/ratfunc.hpp"
#include "gsp4h/rational.hpp"

namespace gsp4h {

using Scalar = std::variant<Rational, RatFunc>;

enum class ArithOp { add, sub, mul, div };

Scalar field_arith(const Scalar& x, const Scalar& y, ArithOp op);
bool is_zero(const Scalar& x);
std::string to_string(const Scalar& x);
// Rational when symbolic is false, otherwise RatFunc.
Scalar parse_scalar(std::string_view s, bool symbolic);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const RatFunc& x) { return x.to_string(); }

template <class F>
F parse_field(std::string_view s);
template <>
inline Rational parse_field<Rational>(std::string_view s) { return Rational::parse(s); }
template <>
inline RatFunc parse_field<RatFunc>(std::string_view s) { return RatFunc::parse(s); }

}  // namespace gsp4h
