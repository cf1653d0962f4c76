#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core/calculus.hpp"
#include "core/evaluate.hpp"
#include "core/parse.hpp"
#include "core/sampling.hpp"
#include "core/zero_test.hpp"
#include "gen.hpp"

using namespace ppsym;

namespace {

double at(const Expr& e, std::initializer_list<std::pair<const char*, double>> values) {
  Environment env;
  for (const auto& [k, v] : values) env.coordinates[k] = v;
  return evaluate(e, env);
}

Expr P(const char* s) { return parse(s); }

}  // namespace

TEST_CASE("canonical form merges like terms and folds numbers") {
  CHECK(P("u + u") == P("2*u"));
  CHECK(P("u*u*u") == P("u^3"));
  CHECK(P("3/6") == num(1, 2));
  CHECK(P("y*z - z*y").is_zero());
  CHECK(P("(u^2)^3") == P("u^6"));
  CHECK(P("x + 0*y") == P("x"));
  CHECK(P("1/2 + 1/3") == num(5, 6));
}

TEST_CASE("rationals stay exact") {
  Expr e = num(1, 3) + num(1, 3) + num(1, 3);
  CHECK(e.is_one());
  CHECK(P("(2/3)^2") == num(4, 9));
  CHECK(Rational(6, -4) == Rational(-3, 2));
}

TEST_CASE("chart shorthands expand") {
  CHECK(P("r") == sqrt(pow(sym("y"), num(2)) + pow(sym("z"), num(2))));
  CHECK(at(P("theta"), {{"y", 0.0}, {"z", 1.0}}) == doctest::Approx(M_PI / 2));
  ParseOptions raw;
  raw.ppwave_chart = false;
  CHECK(parse("r", raw) == sym("r"));
}

TEST_CASE("parse errors carry reason and 1-based offset") {
  auto reason_of = [](const char* text, const ParseOptions& opt = {}) {
    try {
      parse(text, opt);
    } catch (const ParseError& e) {
      return std::make_pair(e.reason(), e.offset());
    }
    FAIL("no error for " << text);
    return std::make_pair(ParseError::Reason::Syntax, std::size_t{0});
  };
  CHECK(reason_of("u +* v") == std::make_pair(ParseError::Reason::Syntax, std::size_t{4}));
  CHECK(reason_of("(u + v").first == ParseError::Reason::Syntax);
  CHECK(reason_of("sin(u, v)").first == ParseError::Reason::Arity);
  ParseOptions strict;
  strict.strict = true;
  strict.symbols = {"zeta"};
  CHECK(reason_of("zeta*w", strict) == std::make_pair(ParseError::Reason::UnknownIdentifier, std::size_t{6}));
  CHECK_NOTHROW(parse("zeta*ln(r)/u^2", strict));
  ParseOptions fns;
  fns.functions = {{"W", 2}};
  CHECK(reason_of("W(u)", fns).first == ParseError::Reason::Arity);
}

TEST_CASE("derivatives of known functions") {
  CHECK(differentiate(P("u^3"), "u") == P("3*u^2"));
  CHECK(differentiate(P("sin(u*y)"), "y") == P("u*cos(u*y)"));
  CHECK(differentiate(P("ln(u)"), "u") == P("1/u"));
  CHECK(simplify_basic(differentiate(P("exp(2*v)*v"), "v") - P("exp(2*v)*(1 + 2*v)")).is_zero());
  CHECK(differentiate(P("y"), "z").is_zero());
}

TEST_CASE("derivatives of abstract functions and rewrite rules") {
  Expr f = P("F(u, y)");
  Expr fy = differentiate(f, "y");
  CHECK(fy.kind() == Kind::DerivApply);
  CHECK(fy.index() == MultiIndex{0, 1});
  CHECK(to_string(fy) == "Derivative[0,1](F)(u, y)");
  CHECK(P("Derivative[0,1](F)(u, y)") == fy);
  CHECK(differentiate(P("F(u^2)"), "u") == P("2*u*Derivative[1](F)(u^2)"));

  // d'' = -d  rewritten to closed form
  RewriteRule rule{FunctionSymbol{"d", 1}, {2}, P("-d(x1)")};
  Expr d2 = differentiate(differentiate(P("d(u)"), "u"), "u");
  CHECK(apply_rewrites(d2, {rule}) == P("-d(u)"));
  Expr d3 = differentiate(d2, "u");
  CHECK(apply_rewrites(d3, {rule}) == P("-Derivative[1](d)(u)"));
}

TEST_CASE("instantiation substitutes bodies and their derivatives") {
  Instantiation inst{{"V", FunctionBody{3, P("x1 + x2*x3")}}};
  Expr e = P("V(u, y, z^2)");
  CHECK(instantiate(e, inst) == P("u + y*z^2"));
  Expr de = differentiate(e, "z");
  CHECK(simplify_basic(instantiate(de, inst) - P("2*y*z")).is_zero());
}

TEST_CASE("substitute is simultaneous") {
  Expr e = substitute(P("u + 2*v"), {{"u", P("v")}, {"v", P("u")}});
  CHECK(e == P("v + 2*u"));
}

TEST_CASE("structural queries") {
  Expr e = P("zeta*F(u) + sin(y)");
  CHECK(depends_on(e, "y"));
  CHECK_FALSE(depends_on(e, "z"));
  CHECK(contains_function(e, "F"));
  std::vector<std::string> syms;
  collect_symbols(e, syms);
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  CHECK(syms == std::vector<std::string>{"u", "y", "zeta"});
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(at(P("ln(u)"), {{"u", -1.0}}), EvalError);
  CHECK_THROWS_AS(at(P("u + w"), {{"u", 1.0}}), EvalError);
  CHECK_THROWS_AS(at(P("1/u"), {{"u", 0.0}}), EvalError);
}

TEST_CASE("zero test tiers") {
  Sampler s(7, 16);
  s.interval("u", 0.5, 2).interval("v", -1, 1).interval("y", 0.5, 2).interval("z", 0.5, 2);
  Tolerance tol;
  CHECK(is_zero(P("u - u"), s, tol).verdict == ZeroVerdict::SymbolicZero);
  CHECK(is_zero(P("sin(u)^2 + cos(u)^2 - 1"), s, tol).verdict == ZeroVerdict::NumericZero);
  ZeroTest nz = is_zero(P("u - 1/2"), s, tol);
  CHECK(nz.verdict == ZeroVerdict::NonZero);
  REQUIRE(nz.witness);
  CHECK(nz.witness_value == doctest::Approx(nz.witness->at("u") - 0.5));
  CHECK_THROWS_AS(is_zero(P("ln(v)"), s, tol), NumericFailure);
}

TEST_CASE("scaled residual convention") {
  Tolerance tol;
  CHECK(tol.accepts(1e-10, 1.0));
  CHECK_FALSE(tol.accepts(1e-8, 1.0));
  CHECK(tol.accepts(5e-13, 0.0));
  CHECK(tol.scaled(1.0, 1.0) == doctest::Approx(1.0 / (1e-3 + 1.0)));
}

TEST_CASE("sampler is deterministic and honours exclusions") {
  Sampler a(42, 20), b(42, 20), c(43, 20);
  for (Sampler* s : {&a, &b, &c}) s->interval("u", -1, 1).exclude([](const Point& p) { return std::abs(p.at("u")) > 0.2; });
  auto pa = a.points(), pb = b.points(), pc = c.points();
  CHECK(pa == pb);
  CHECK(pa != pc);
  REQUIRE(pa.size() == 20);
  for (const auto& p : pa) CHECK(std::abs(p.at("u")) > 0.2);
}

// ---- properties -------------------------------------------------------------

TEST_CASE("property: printing round-trips through the parser") {
  testgen::ExprGen gen(1001);
  for (int i = 0; i < 300; ++i) {
    Expr e = gen.expr(4);
    Expr back = parse(to_string(e));
    INFO(to_string(e));
    CHECK(back == e);
  }
}

TEST_CASE("property: symbolic derivative matches central differences") {
  testgen::ExprGen gen(2002);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    Expr e = gen.expr(3);
    const char* var = std::array<const char*, 4>{"u", "v", "y", "z"}[gen.next(4)];
    Expr de = differentiate(e, var);
    Environment env = gen.point();
    double h = 1e-5, x0 = env.coordinates[var];
    auto f = [&](double x) {
      Environment e2 = env;
      e2.coordinates[var] = x;
      return evaluate(e, e2);
    };
    double fd = (f(x0 - 2 * h) - 8 * f(x0 - h) + 8 * f(x0 + h) - f(x0 + 2 * h)) / (12 * h);
    double sym_value = evaluate(de, env);
    INFO(to_string(e) << " d/d" << var);
    CHECK(testgen::close(sym_value, fd, 1e-6, 1e-6));
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("property: simplify_basic preserves value") {
  testgen::ExprGen gen(3003);
  for (int i = 0; i < 200; ++i) {
    Expr e = gen.expr(4) * (gen.expr(2) + gen.expr(2));
    Environment env = gen.point();
    INFO(to_string(e));
    CHECK(testgen::close(evaluate(simplify_basic(e), env), evaluate(e, env), 1e-9, 1e-9));
  }
}

TEST_CASE("property: derivative operators commute") {
  testgen::ExprGen gen(4004);
  for (int i = 0; i < 100; ++i) {
    Expr e = gen.expr(3);
    Expr a = differentiate(differentiate(e, "u"), "y");
    Expr b = differentiate(differentiate(e, "y"), "u");
    Environment env = gen.point();
    CHECK(testgen::close(evaluate(a, env), evaluate(b, env), 1e-9, 1e-9));
  }
}
