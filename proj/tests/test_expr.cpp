#include <doctest.h>

#include "oracle.hpp"
#include "recsym/expr.hpp"
#include "support.hpp"

using namespace recsym;

namespace {

std::string eval_text(std::string_view src, Backend backend = Backend::Exact, const std::vector<Binding>& b = {}) {
  return format_value(evaluate(src, b, backend));
}

SourceSpan span_of(std::string_view src, Backend backend = Backend::Exact) {
  try {
    evaluate(src, {}, backend);
  } catch (const ExprError& e) {
    return e.span();
  }
  FAIL("no ExprError for " << src);
  return {};
}

Quat4 q(std::string_view src) { return std::get<Quat4>(evaluate(src, {}, Backend::Exact)); }

}  // namespace

TEST_CASE("parse accepts the grammar") {
  const Expr rs = parse("rs((1;1,0,0),(1;0,1,0))");
  CHECK(rs.kind == Expr::Kind::Call);
  CHECK(rs.name == "rs");
  REQUIRE(rs.args.size() == 2);
  CHECK(rs.args[0].kind == Expr::Kind::Quat);
  CHECK(parse("qform((13;0,0,5))").name == "qform");
  CHECK(parse("  le ( X , conj( Y ) ) ").args[1].args[0].name == "Y");
  const Expr b = parse("boost(3/5, -0.25, 1e-1)");
  CHECK(b.kind == Expr::Kind::Boost);
  CHECK(b.velocity[0].exact == Rational(3, 5));
  CHECK(b.velocity[1].exact == Rational(-1, 4));
  CHECK(b.velocity[2].exact == Rational(1, 10));
  const Expr lit = parse("(1-i; i, -2i, 1/2+3/4i)");
  CHECK(lit.quat[0].re.exact == 1);
  CHECK(lit.quat[0].im.exact == -1);
  CHECK(lit.quat[1].im.exact == 1);
  CHECK(lit.quat[2].im.exact == -2);
  CHECK(lit.quat[3].re.exact == Rational(1, 2));
  CHECK(lit.quat[3].im.exact == Rational(3, 4));
  CHECK(parse("(1;0,0,0)").span.length == 9);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse("le((1;1,0,0))"); }) == Errc::ArityError);
  CHECK(code_of([] { parse("conj((1;0,0,0),(1;0,0,0))"); }) == Errc::ArityError);
  CHECK(code_of([] { parse("boost(0.1,0.2)"); }) == Errc::ArityError);
  CHECK(code_of([] { parse("(1;0,0"); }) == Errc::ParseError);
  CHECK(code_of([] { parse("(1;0,0,0))"); }) == Errc::ParseError);
  CHECK(code_of([] { parse("le"); }) == Errc::ParseError);
  CHECK(code_of([] { parse("(1/0;0,0,0)"); }) == Errc::ParseError);
  CHECK(code_of([] { parse("(1/;0,0,0)"); }) == Errc::ParseError);
  CHECK(code_of([] { parse(""); }) == Errc::ParseError);
  CHECK(code_of([] { parse("(a;0,0,0)"); }) == Errc::ParseError);
}

TEST_CASE("error spans carry line and column") {
  try {
    parse("le((1;1,0,0),\n   (1;0,0 0))");
    FAIL("expected ParseError");
  } catch (const ExprError& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.span().line == 2);
    CHECK(e.span().column == 11);
    CHECK(std::string(e.what()).find("line 2, column 11") != std::string::npos);
  }
  const SourceSpan det = span_of("qform(det((1;0,0,0)))");
  CHECK(det.column == 11);
  const SourceSpan sq = span_of("rs((1;0,0,0), le((1;1,0,0),(2;1,1,0)))");
  CHECK(sq.column == 15);
  CHECK(sq.length == 23);
}

TEST_CASE("type checking runs before evaluation") {
  CHECK(code_of([] { evaluate("det((1;0,0,0))", {}, Backend::Exact); }) == Errc::TypeError);
  CHECK(code_of([] { evaluate("le(qform((1;0,0,0)),(1;0,0,0))", {}, Backend::Exact); }) == Errc::TypeError);
  CHECK(code_of([] { evaluate("conj(embed((1;0,0,0)))", {}, Backend::Exact); }) == Errc::TypeError);
  // The type error is reported even though the other argument would fail to evaluate.
  CHECK(code_of([] { evaluate("rs(le((1;1,0,0),(2;1,1,0)), embed((1;0,0,0)))", {}, Backend::Exact); }) ==
        Errc::TypeError);
  CHECK(code_of([] { evaluate("rs(X,(1;0,0,0))", {}, Backend::Exact); }) == Errc::UnboundVariable);
  CHECK(type_check(parse("det(embed(X))"), {{"X", ValueType::Quat}}) == ValueType::Scalar);
  CHECK(type_check(parse("embed(X)"), {{"X", ValueType::Quat}}) == ValueType::Mat);
}

TEST_CASE("evaluation examples") {
  CHECK(eval_text("qform(le((1;1,0,0),(13;0,0,5)))") == "0");
  CHECK(eval_text("le((1;1,0,0),(13;0,0,5))") == "(13; 12, 0, 5)");
  CHECK(eval_text("rs((1;1,0,0),(1;0,1,0))") == "(1; 1, 1, 1i)");
  CHECK(eval_text("boost(3/5,0,0)") == "(5/4; 3/4, 0, 0)");
  CHECK(eval_text("velocity_free", Backend::Exact, {{"velocity_free", CScalar::exact(Rational(15, 17))}}) == "15/17");
  CHECK(eval_text("det(embed((13;0,0,5)))") == "144");
  CHECK(eval_text("cross((0;1,0,0),(0;0,1,0))") == "(0; 0, 0, 1i)");
  CHECK(eval_text("embed((1;1,0,0))") == "[[1, 1], [1, 1]]");
  CHECK(eval_text("conj((1-i; i, -2i, 1/2+3/4i))") == "(1-1i; -1i, 2i, -1/2-3/4i)");
  CHECK(code_of([] { evaluate("le((1;1,0,0),(2;1,1,0))", {}, Backend::Exact); }) == Errc::SqrtNotExact);
  CHECK(code_of([] { evaluate("boost(3/5,0,4/5)", {}, Backend::Exact); }) == Errc::SuperluminalVelocity);
  const Binding fx{"X", Quat4::identity(Backend::Float)};
  CHECK(code_of([&] { evaluate("rs((1;0,0,0),X)", {fx}, Backend::Exact); }) == Errc::BackendMismatch);
}

TEST_CASE("rs with the identity returns the bound value") {
  oracle::Gen gen(61);
  for (int n = 0; n < 100; ++n) {
    const Quat4 x = oracle::to_quat(gen.quat());
    CHECK(std::get<Quat4>(evaluate("rs((1;0,0,0),X)", {{"X", x}}, Backend::Exact)) == x);
  }
}

TEST_CASE("float results print 17 significant digits") {
  CHECK(eval_text("qform((0.1;0,0,0))", Backend::Float) == "0.010000000000000002");
  CHECK(eval_text("(1/3;0,0,0)", Backend::Float) == "(0.33333333333333331; 0, 0, 0)");
  CHECK(eval_text("boost(0.6,0,0)", Backend::Float) == "(1.25; 0.75, 0, 0)");
  CHECK(eval_text("qform((0.1;0,0,0))") == "1/100");
}

TEST_CASE("printing and re-parsing reproduces exact values") {
  oracle::Gen gen(62);
  for (int n = 0; n < 300; ++n) {
    const Quat4 a = oracle::to_quat(gen.quat());
    const Quat4 b = oracle::to_quat(gen.quat());
    const Quat4 t = oracle::to_quat(gen.timelike());
    for (const Quat4& v : {a, rs_compose(a, b), le_compose(a, t), conj(b)}) {
      CHECK(q(to_string(v)) == v);
    }
  }
}

TEST_CASE("value JSON") {
  const Json j = value_to_json(evaluate("qform((2;1,0,0))", {}, Backend::Exact));
  CHECK(j["re"] == "3");
  CHECK(j["im"] == "0");
  CHECK(value_to_json(evaluate("(1;0,0,0)", {}, Backend::Exact)).contains("v"));
  CHECK(type_name(ValueType::Quat) == "4-vector");
}
