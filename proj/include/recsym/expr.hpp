#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "recsym/json_io.hpp"

namespace recsym {

// Grammar:
//   expr  := term | func
//   func  := ("le" | "rs" | "cross") "(" expr "," expr ")"
//          | ("conj" | "qform" | "embed" | "det") "(" expr ")"
//          | "boost" "(" num "," num "," num ")"
//   term  := ident | quat
//   quat  := "(" cnum ";" cnum "," cnum "," cnum ")"
//   cnum  := num | num ("+"|"-") num "i" | num "i"
//   num   := ["+"|"-"] (digits "/" digits | decimal [exponent])
// A coefficient directly before "i" may be omitted ("i", "1-i").

struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Error tied to a region of the source text.
class ExprError : public Error {
 public:
  ExprError(Errc code, const std::string& detail, SourceSpan span);
  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

/// A numeric literal kept both exactly and as the nearest double.
struct Number {
  Rational exact;
  double approx = 0.0;
};

struct ComplexLiteral {
  Number re;
  Number im;
};

struct Expr {
  enum class Kind { Quat, Variable, Call, Boost };

  Kind kind = Kind::Quat;
  SourceSpan span;
  std::string name;
  std::array<ComplexLiteral, 4> quat{};
  std::array<Number, 3> velocity{};
  std::vector<Expr> args;
};

enum class ValueType { Scalar, Quat, Mat };

std::string_view type_name(ValueType type) noexcept;

using Value = std::variant<CScalar, Quat4, Mat2>;

ValueType type_of(const Value& v) noexcept;

/// Throws ExprError with Errc::ParseError or Errc::ArityError.
Expr parse(std::string_view source);

/// Static type of the expression given the types of bound names. Throws
/// ExprError with Errc::TypeError or Errc::UnboundVariable.
ValueType type_check(const Expr& e, const std::map<std::string, ValueType, std::less<>>& bound);

struct Binding {
  std::string name;
  Value value;
};

/// Type-checks, then evaluates bottom-up. Algebra failures are rethrown as
/// ExprError carrying the failing subexpression's span and original code.
Value evaluate(const Expr& e, const std::vector<Binding>& bindings, Backend backend);

/// parse + evaluate.
Value evaluate(std::string_view source, const std::vector<Binding>& bindings, Backend backend);

std::string format_value(const Value& v);
Json value_to_json(const Value& v);

}  // namespace recsym
