#include "recsym/expr.hpp"

#include <cctype>
#include <cstdlib>

#include "recsym/boost.hpp"

namespace recsym {

namespace {

struct FunctionSig {
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<FunctionSig, 8> kFunctions{{
    {"le", 2},
    {"rs", 2},
    {"cross", 2},
    {"conj", 1},
    {"qform", 1},
    {"embed", 1},
    {"det", 1},
    {"boost", 3},
}};

const FunctionSig* find_function(std::string_view name) {
  for (const auto& f : kFunctions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::string describe(const SourceSpan& span) {
  return "line " + std::to_string(span.line) + ", column " + std::to_string(span.column);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "' after expression");
    return e;
  }

 private:
  SourceSpan span_at(std::size_t start, std::size_t end) const {
    SourceSpan s;
    s.offset = start;
    s.length = end > start ? end - start : 0;
    for (std::size_t k = 0; k < start && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++s.line;
        s.column = 1;
      } else {
        ++s.column;
      }
    }
    return s;
  }

  [[noreturn]] void fail(const std::string& what, Errc code = Errc::ParseError) const {
    fail_at(what, pos_, std::min(pos_ + 1, src_.size()), code);
  }

  [[noreturn]] void fail_at(const std::string& what, std::size_t start, std::size_t end,
                            Errc code = Errc::ParseError) const {
    const SourceSpan span = span_at(start, end);
    throw ExprError(code, what + " at " + describe(span), span);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool at_digit() const {
    return pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0 || src_[pos_] == '.');
  }

  Expr parse_expr() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) fail("expected an expression but input ended");
    const char c = src_[pos_];
    if (c == '(') return parse_quat();
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      std::string name = read_identifier();
      const FunctionSig* fn = find_function(name);
      if (fn == nullptr) {
        Expr v;
        v.kind = Expr::Kind::Variable;
        v.name = std::move(name);
        v.span = span_at(start, pos_);
        return v;
      }
      if (!peek('(')) fail("expected '(' after '" + name + "'");
      return parse_call(*fn, start);
    }
    fail("expected a 4-vector literal, a name or a function call");
  }

  std::string read_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 || src_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr parse_call(const FunctionSig& fn, std::size_t start) {
    expect('(');
    Expr call;
    call.name = std::string(fn.name);
    std::size_t count = 0;
    if (fn.name == "boost") {
      call.kind = Expr::Kind::Boost;
      for (;;) {
        Number n = parse_number();
        if (count < 3) call.velocity[count] = n;
        ++count;
        if (!peek(',')) break;
        ++pos_;
      }
    } else {
      call.kind = Expr::Kind::Call;
      if (!peek(')')) {
        for (;;) {
          call.args.push_back(parse_expr());
          ++count;
          if (!peek(',')) break;
          ++pos_;
        }
      }
    }
    if (!peek(')')) {
      if (pos_ >= src_.size()) fail("expected ')' to close '" + call.name + "(' but input ended");
      fail("expected ',' or ')' in call to '" + call.name + "'");
    }
    ++pos_;
    if (count != fn.arity) {
      fail_at("'" + call.name + "' takes " + std::to_string(fn.arity) + " argument" + (fn.arity == 1 ? "" : "s") +
                  ", got " + std::to_string(count),
              start, pos_, Errc::ArityError);
    }
    call.span = span_at(start, pos_);
    return call;
  }

  Expr parse_quat() {
    const std::size_t start = pos_;
    expect('(');
    Expr q;
    q.kind = Expr::Kind::Quat;
    q.quat[0] = parse_cnum();
    expect(';');
    q.quat[1] = parse_cnum();
    expect(',');
    q.quat[2] = parse_cnum();
    expect(',');
    q.quat[3] = parse_cnum();
    expect(')');
    q.span = span_at(start, pos_);
    return q;
  }

  static Number negate(Number n) { return {-n.exact, -n.approx}; }

  static Number one() { return {Rational(1), 1.0}; }

  bool read_sign() {
    skip_space();
    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) return src_[pos_++] == '-';
    return false;
  }

  bool take_imaginary_unit() {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == 'i') {
      const bool followed = pos_ + 1 < src_.size() &&
                            (std::isalnum(static_cast<unsigned char>(src_[pos_ + 1])) != 0 || src_[pos_ + 1] == '_');
      if (!followed) {
        ++pos_;
        return true;
      }
    }
    return false;
  }

  ComplexLiteral parse_cnum() {
    const Number zero{Rational(0), 0.0};
    const bool negative = read_sign();
    skip_space();
    Number first;
    if (at_digit()) {
      first = parse_unsigned();
      if (negative) first = negate(first);
      if (take_imaginary_unit()) return {zero, first};
    } else if (take_imaginary_unit()) {
      return {zero, negative ? negate(one()) : one()};
    } else {
      fail("expected a number");
    }

    skip_space();
    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
      const bool im_negative = src_[pos_++] == '-';
      skip_space();
      Number im = at_digit() ? parse_unsigned() : one();
      if (!take_imaginary_unit()) fail("expected 'i' after the imaginary part");
      return {first, im_negative ? negate(im) : im};
    }
    return {first, zero};
  }

  Number parse_number() {
    const bool negative = read_sign();
    skip_space();
    if (!at_digit()) fail("expected a number");
    Number n = parse_unsigned();
    return negative ? negate(n) : n;
  }

  Number parse_unsigned() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t s = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) ++pos_;
      return pos_ - s;
    };
    const std::size_t int_digits = digits();
    bool fraction = false;
    if (pos_ < src_.size() && src_[pos_] == '/' && int_digits > 0) {
      ++pos_;
      if (digits() == 0) fail("expected a denominator after '/'");
      fraction = true;
    } else {
      std::size_t frac_digits = 0;
      if (pos_ < src_.size() && src_[pos_] == '.') {
        ++pos_;
        frac_digits = digits();
      }
      if (int_digits + frac_digits == 0) fail_at("malformed number", start, pos_);
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        std::size_t look = pos_ + 1;
        if (look < src_.size() && (src_[look] == '+' || src_[look] == '-')) ++look;
        if (look < src_.size() && std::isdigit(static_cast<unsigned char>(src_[look])) != 0) {
          pos_ = look;
          digits();
        }
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    Number n;
    try {
      n.exact = parse_rational(text);
    } catch (const Error& e) {
      fail_at(std::string(e.what()), start, pos_);
    }
    if (fraction) {
      n.approx = n.exact.get_num().get_d() / n.exact.get_den().get_d();
    } else {
      n.approx = std::strtod(text.c_str(), nullptr);
    }
    return n;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

CScalar to_scalar(const ComplexLiteral& c, Backend backend) {
  if (backend == Backend::Exact) return CScalar::exact(c.re.exact, c.im.exact);
  return CScalar::floating(c.re.approx, c.im.approx);
}

CScalar to_scalar(const Number& n, Backend backend) {
  if (backend == Backend::Exact) return CScalar::exact(n.exact);
  return CScalar::floating(n.approx);
}

using TypeEnv = std::map<std::string, ValueType, std::less<>>;

[[noreturn]] void type_error(const Expr& e, const std::string& what) {
  throw ExprError(Errc::TypeError, what + " at " + describe(e.span), e.span);
}

ValueType expect_arg(const Expr& call, std::size_t k, ValueType want, const TypeEnv& env) {
  const ValueType got = type_check(call.args[k], env);
  if (got != want) {
    type_error(call.args[k], "'" + call.name + "' expects a " + std::string(type_name(want)) + " argument, got a " +
                                 std::string(type_name(got)));
  }
  return got;
}

const Value* lookup(const std::vector<Binding>& bindings, std::string_view name) {
  for (const auto& b : bindings) {
    if (b.name == name) return &b.value;
  }
  return nullptr;
}

Value eval_node(const Expr& e, const std::vector<Binding>& bindings, Backend backend);

template <typename T>
const T& as(const Value& v) {
  return std::get<T>(v);
}

Value eval_inner(const Expr& e, const std::vector<Binding>& bindings, Backend backend) {
  switch (e.kind) {
    case Expr::Kind::Quat:
      return Quat4(to_scalar(e.quat[0], backend),
                   {to_scalar(e.quat[1], backend), to_scalar(e.quat[2], backend), to_scalar(e.quat[3], backend)});
    case Expr::Kind::Variable: {
      const Value* v = lookup(bindings, e.name);
      if (v == nullptr) throw ExprError(Errc::UnboundVariable, "'" + e.name + "' is not bound", e.span);
      return *v;
    }
    case Expr::Kind::Boost: {
      Vec3 v{to_scalar(e.velocity[0], backend), to_scalar(e.velocity[1], backend), to_scalar(e.velocity[2], backend)};
      return boost_from_velocity(Velocity3(std::move(v)));
    }
    case Expr::Kind::Call: break;
  }
  std::vector<Value> args;
  for (const auto& a : e.args) args.push_back(eval_node(a, bindings, backend));
  const std::string& f = e.name;
  if (f == "le") return le_compose(as<Quat4>(args[0]), as<Quat4>(args[1]));
  if (f == "rs") return rs_compose(as<Quat4>(args[0]), as<Quat4>(args[1]));
  if (f == "cross") {
    const CrossTerm ct = cross_term(as<Quat4>(args[0]).vec(), as<Quat4>(args[1]).vec());
    return Quat4(ct.scalar, ct.vector);
  }
  if (f == "conj") return conj(as<Quat4>(args[0]));
  if (f == "qform") return qform(as<Quat4>(args[0]));
  if (f == "embed") return embed(as<Quat4>(args[0]));
  if (f == "det") return det(as<Mat2>(args[0]));
  throw ExprError(Errc::ParseError, "unknown function '" + f + "'", e.span);
}

Value eval_node(const Expr& e, const std::vector<Binding>& bindings, Backend backend) {
  try {
    return eval_inner(e, bindings, backend);
  } catch (const ExprError&) {
    throw;
  } catch (const Error& err) {
    throw ExprError(err.code(), err.detail() + " in expression at " + describe(e.span), e.span);
  }
}

}  // namespace

ExprError::ExprError(Errc code, const std::string& detail, SourceSpan span) : Error(code, detail), span_(span) {}

std::string_view type_name(ValueType type) noexcept {
  switch (type) {
    case ValueType::Scalar: return "scalar";
    case ValueType::Quat: return "4-vector";
    case ValueType::Mat: return "matrix";
  }
  return "value";
}

ValueType type_of(const Value& v) noexcept {
  if (std::holds_alternative<CScalar>(v)) return ValueType::Scalar;
  if (std::holds_alternative<Quat4>(v)) return ValueType::Quat;
  return ValueType::Mat;
}

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

ValueType type_check(const Expr& e, const TypeEnv& bound) {
  switch (e.kind) {
    case Expr::Kind::Quat:
    case Expr::Kind::Boost: return ValueType::Quat;
    case Expr::Kind::Variable: {
      auto it = bound.find(e.name);
      if (it == bound.end()) {
        throw ExprError(Errc::UnboundVariable, "'" + e.name + "' is not bound at " + describe(e.span), e.span);
      }
      return it->second;
    }
    case Expr::Kind::Call: break;
  }
  const std::string& f = e.name;
  if (f == "le" || f == "rs" || f == "cross") {
    expect_arg(e, 0, ValueType::Quat, bound);
    expect_arg(e, 1, ValueType::Quat, bound);
    return ValueType::Quat;
  }
  if (f == "det") {
    expect_arg(e, 0, ValueType::Mat, bound);
    return ValueType::Scalar;
  }
  expect_arg(e, 0, ValueType::Quat, bound);
  if (f == "conj") return ValueType::Quat;
  if (f == "qform") return ValueType::Scalar;
  return ValueType::Mat;  // embed
}

Value evaluate(const Expr& e, const std::vector<Binding>& bindings, Backend backend) {
  TypeEnv env;
  for (const auto& b : bindings) env[b.name] = type_of(b.value);
  type_check(e, env);
  return eval_node(e, bindings, backend);
}

Value evaluate(std::string_view source, const std::vector<Binding>& bindings, Backend backend) {
  return evaluate(parse(source), bindings, backend);
}

std::string format_value(const Value& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

Json value_to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

}  // namespace recsym
