#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/calculus.hpp"
#include "core/parse.hpp"
#include "core/zero_test.hpp"
#include "gen.hpp"
#include "geometry/geometry.hpp"

using namespace ppsym;

namespace {

Expr P(const char* s) { return parse(s); }

Sampler box(std::uint64_t seed = 42, std::size_t n = 32) {
  Sampler s(seed, n);
  s.interval("u", 0.5, 2).interval("v", -1, 1).interval("y", 0.5, 2).interval("z", 0.5, 2);
  return s;
}

bool vanishes(const Expr& e) { return is_zero(e, box(), Tolerance{}).zero(); }

// Second-order central difference of f along two coordinates.
double fd2(const Expr& f, Environment env, const std::string& a, const std::string& b, double h = 1e-3) {
  auto at = [&](double da, double db) {
    Environment e = env;
    e.coordinates[a] += da;
    e.coordinates[b] += db;
    return evaluate(f, e);
  };
  if (a == b) return (at(h, 0) - 2 * at(0, 0) + at(-h, 0)) / (h * h);
  return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
}

}  // namespace

TEST_CASE("pp-wave metric components") {
  Metric g = build_ppwave_metric(P("H(u, y, z)"));
  CHECK(g.g[0][0] == P("-2*H(u, y, z)"));
  CHECK(g.g[0][1] == num(-1));
  CHECK(g.g[1][1].is_zero());
  CHECK(g.g[2][2].is_one());
  CHECK(g.g[3][3].is_one());
  CHECK(g.sqrt_det.is_one());
  CHECK(simplify_basic(determinant(g.g) + num(1)).is_zero());
  Matrix4 gi = inverse_metric(g);
  CHECK(gi[1][1] == P("2*H(u, y, z)"));
  CHECK(gi[0][1] == num(-1));
  CHECK(gi[0][0].is_zero());
}

TEST_CASE("inverse metric is an inverse") {
  Metric g = build_ppwave_metric(P("u*y^2 - z^3"));
  Matrix4 gi = inverse_metric(g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Expr s;
      for (int k = 0; k < 4; ++k) s = s + g.g[i][k] * gi[k][j];
      CHECK(simplify_basic(s - num(i == j ? 1 : 0)).is_zero());
    }
}

TEST_CASE("connection has exactly the pp-wave nonzero set") {
  Metric g = build_ppwave_metric(P("H(u, y, z)"));
  Connection G = christoffel(g);
  std::map<std::array<int, 3>, Expr> expected = {
      {{1, 0, 0}, P("Derivative[1,0,0](H)(u, y, z)")},
      {{2, 0, 0}, P("Derivative[0,1,0](H)(u, y, z)")},
      {{3, 0, 0}, P("Derivative[0,0,1](H)(u, y, z)")},
      {{1, 2, 0}, P("Derivative[0,1,0](H)(u, y, z)")},
      {{1, 0, 2}, P("Derivative[0,1,0](H)(u, y, z)")},
      {{1, 3, 0}, P("Derivative[0,0,1](H)(u, y, z)")},
      {{1, 0, 3}, P("Derivative[0,0,1](H)(u, y, z)")},
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Expr got = simplify_basic(G[i][j][k]);
        auto it = expected.find({i, j, k});
        INFO(i << j << k << " " << to_string(got));
        if (it == expected.end()) CHECK(got.is_zero());
        else CHECK(simplify_basic(got - it->second).is_zero());
      }
}

TEST_CASE("Laplacian matches the closed form for seeded scalars") {
  testgen::ExprGen gen(77);
  Expr H = P("u*y^2 + sin(z)*u - y*z/3");
  Metric g = build_ppwave_metric(H);
  for (int i = 0; i < 10; ++i) {
    Expr f = gen.expr(3);
    Expr closed = num(-2) * differentiate(differentiate(f, "u"), "v") +
                  num(2) * H * differentiate(differentiate(f, "v"), "v") + differentiate(differentiate(f, "y"), "y") +
                  differentiate(differentiate(f, "z"), "z");
    INFO(to_string(f));
    CHECK(vanishes(laplace_beltrami(g, f) - closed));
    CHECK(vanishes(ppwave_laplacian(H, f) - closed));
  }
}

TEST_CASE("Laplacian agrees with a finite-difference oracle") {
  testgen::ExprGen gen(78);
  Expr H = P("exp(u/3)*(y^2 - z^2)");
  Metric g = build_ppwave_metric(H);
  for (int i = 0; i < 10; ++i) {
    Expr f = gen.expr(3);
    Environment env = gen.point();
    double Hv = evaluate(H, env);
    double oracle = -2 * fd2(f, env, "u", "v") + 2 * Hv * fd2(f, env, "v", "v") + fd2(f, env, "y", "y") +
                    fd2(f, env, "z", "z");
    INFO(to_string(f));
    CHECK(testgen::close(evaluate(laplace_beltrami(g, f), env), oracle, 1e-4, 1e-4));
  }
}

TEST_CASE("generic metric path agrees with the pp-wave build") {
  Expr H = P("u^2*y*z");
  Matrix4 m;
  m[0][0] = num(-2) * H;
  m[0][1] = m[1][0] = num(-1);
  m[2][2] = m[3][3] = num(1);
  Metric generic = make_metric(m);
  Metric pp = build_ppwave_metric(H);
  Expr f = P("sin(u*v) + y^2*z");
  CHECK(vanishes(laplace_beltrami(generic, f) - laplace_beltrami(pp, f)));
}

TEST_CASE("Lie derivative of the metric") {
  Metric g = build_ppwave_metric(P("H(u, y, z)"));
  Matrix4 L = lie_derivative_metric(g, d_v());
  for (const auto& row : L)
    for (const auto& e : row) CHECK(simplify_basic(e).is_zero());

  // flat space: y d_y + z d_z + 2v d_v is homothetic with factor 1
  Metric flat = build_ppwave_metric(num(0));
  VectorField h(num(0), P("2*v"), sym("y"), sym("z"));
  Matrix4 Lh = lie_derivative_metric(flat, h);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(simplify_basic(Lh[i][j] - num(2) * flat.g[i][j]).is_zero());
  CHECK(divergence(flat, h) == num(4));
}

TEST_CASE("vector field algebra") {
  VectorField rot = d_theta();
  CHECK(rot == VectorField(num(0), num(0), P("-z"), P("y")));
  VectorField c = commutator(d_y(), rot);
  CHECK(c == d_z());
  VectorField c2 = commutator(rot, r_d_r());
  CHECK(c2.is_zero());
  CHECK(apply_field(rot, P("y^2 + z^2")).is_zero());
  CHECK((num(2) * d_u() + d_v()) == VectorField(num(2), num(1), num(0), num(0)));
}

TEST_CASE("transverse Laplacian") {
  CHECK(transverse_laplacian(P("y^2 - z^2")).is_zero());
  CHECK(transverse_laplacian(P("u*(y^2 + z^2)")) == P("4*u"));
  CHECK(vanishes(transverse_laplacian(P("ln(r)"))));
}

TEST_CASE("vector fields parse as bracketed 4-tuples") {
  VectorField xi = parse_field("[u^2, r^2/2, u*y, u*z]");
  CHECK(xi[0] == P("u^2"));
  CHECK(xi[1] == P("(y^2 + z^2)/2"));
  CHECK(parse_field(to_string(xi)) == xi);
  CHECK(parse_field("[f(u, y), 0, sin(y), 0]")[0] == P("f(u, y)"));
  CHECK_THROWS_AS(parse_field("[u, 0, 0]"), ParseError);
  CHECK_THROWS_AS(parse_field("u, 0, 0, 0"), ParseError);
  CHECK_THROWS_AS(parse_field("[u, 0, 0, 0"), ParseError);
  try {
    parse_field("[u, 0, 0]");
  } catch (const ParseError& e) {
    CHECK(e.reason() == ParseError::Reason::Arity);
  }
}

TEST_CASE("property: Lie bracket is antisymmetric and satisfies Jacobi") {
  testgen::ExprGen gen(91);
  auto field = [&] { return VectorField(gen.expr(2), gen.expr(2), gen.expr(2), gen.expr(2)); };
  for (int i = 0; i < 10; ++i) {
    VectorField X = field(), Y = field(), Z = field();
    VectorField anti = commutator(X, Y) + commutator(Y, X);
    VectorField jac = commutator(X, commutator(Y, Z)) + commutator(Y, commutator(Z, X)) + commutator(Z, commutator(X, Y));
    Environment env = gen.point();
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(evaluate(anti[k], env)) < 1e-9);
      CHECK(std::abs(evaluate(jac[k], env)) < 1e-6);
    }
  }
}
