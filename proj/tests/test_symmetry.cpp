#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/calculus.hpp"
#include "core/parse.hpp"
#include "core/zero_test.hpp"
#include "gen.hpp"
#include "symmetry/symmetry.hpp"

using namespace ppsym;

namespace {

Expr P(const char* s) { return parse(s); }
VectorField F(const char* s) { return parse_field(s); }

Sampler box(std::uint64_t seed = 42, std::size_t n = 32) {
  Sampler s(seed, n);
  s.interval("u", 0.5, 2).interval("v", -1, 1).interval("y", 0.5, 2).interval("z", 0.5, 2);
  return s;
}

bool vanishes(const Expr& e) { return is_zero(e, box(), Tolerance{}).zero(); }

ConformalClass classify(const char* H, const char* xi) {
  return classify_conformal(build_ppwave_metric(P(H)), F(xi), box(), Tolerance{});
}

// H = (N/4) r^2 + delta/r^2 with N = 4/5, w = sqrt(2N)
const char* kOscH = "(1/5)*(y^2 + z^2) + (2/5)/(y^2 + z^2)";
const char* kOscC4 = "[sin(sqrt(8/5)*u), -(2/5)*sin(sqrt(8/5)*u)*r^2, sqrt(8/5)/2*y*cos(sqrt(8/5)*u), sqrt(8/5)/2*z*cos(sqrt(8/5)*u)]";

}  // namespace

TEST_CASE("classifier verdicts") {
  SUBCASE("null translation is Killing") {
    ConformalClass c = classify("H(u, y, z)", "[0, 1, 0, 0]");
    CHECK(c.kind == ConformalKind::Killing);
    CHECK(c.psi.is_zero());
  }
  SUBCASE("flat dilation is homothetic") {
    ConformalClass c = classify("0", "[0, 2*v, y, z]");
    CHECK(c.kind == ConformalKind::Homothetic);
    CHECK(c.psi == num(1));
  }
  SUBCASE("flat special conformal") {
    ConformalClass c = classify("0", "[u^2, r^2/2, u*y, u*z]");
    CHECK(c.kind == ConformalKind::SpecialConformal);
    CHECK(vanishes(c.psi - P("u")));
  }
  SUBCASE("oscillator profile admits a proper CKV") {
    ConformalClass c = classify(kOscH, kOscC4);
    CHECK(c.kind == ConformalKind::ProperConformal);
    CHECK(vanishes(c.psi - P("sqrt(8/5)/2*cos(sqrt(8/5)*u)")));
    CHECK(c.max_residual() < 1e-9);
  }
  SUBCASE("shear is not conformal") {
    ConformalClass c = classify("0", "[y, 0, 0, 0]");
    CHECK(c.kind == ConformalKind::NotConformal);
    CHECK(c.ckv.witness);
  }
  SUBCASE("a Killing field of one profile fails for another") {
    CHECK(classify("y^2", "[0, 0, 0, 1]").kind == ConformalKind::Killing);
    CHECK(classify("y^2 + z^3", "[0, 0, 0, 1]").kind == ConformalKind::NotConformal);
  }
}

TEST_CASE("conformal factor is a quarter of the divergence") {
  Metric g = build_ppwave_metric(P("u*y^2"));
  VectorField xi = F("[u^2, v*u + y, u*y, u*z]");
  CHECK(simplify_basic(conformal_factor(g, xi) - divergence(g, xi) / num(4)).is_zero());
  for (const Expr& r : ckv_residuals(build_ppwave_metric(num(0)), F("[u^2, r^2/2, u*y, u*z]"), sym("u")))
    CHECK(vanishes(r));
}

TEST_CASE("names round-trip") {
  for (auto k : {ConformalKind::Killing, ConformalKind::Homothetic, ConformalKind::SpecialConformal,
                 ConformalKind::ProperConformal, ConformalKind::NotConformal})
    CHECK(conformal_kind_from_name(conformal_kind_name(k)) == k);
  CHECK_FALSE(conformal_kind_from_name("Affine"));
}

TEST_CASE("Klein-Gordon condition") {
  Metric flat = build_ppwave_metric(num(0));
  // xi V + 2 psi V - Laplacian(psi), written out by hand
  VectorField h = F("[0, 2*v, y, z]");
  CHECK(vanishes(kg_symmetry_residual(flat, h, num(1), P("1/y^2"))));
  CHECK(vanishes(kg_symmetry_residual(flat, h, num(1), P("V0(y/z, u)/z^2"))));
  CHECK_FALSE(vanishes(kg_symmetry_residual(flat, h, num(1), P("1/y"))));

  Expr res = kg_symmetry_residual(flat, d_v(), num(0), P("u*y + v/10"));
  ZeroTest z = is_zero(res, box(), Tolerance{});
  CHECK_FALSE(z.zero());
  CHECK(z.witness_value == doctest::Approx(0.1));

  // a non-harmonic psi contributes its Laplacian
  VectorField xi = F("[0, 0, 0, 0]");
  CHECK(vanishes(kg_symmetry_residual(flat, xi, P("y^2"), num(0)) + num(2)));
}

TEST_CASE("lift and gauge conventions") {
  SymmetryCandidate c = lift_to_point_symmetry(d_u(), P("u*y"));
  CHECK(c.psi_coefficient == P("-u*y"));
  Covector A = noether_gauge(build_ppwave_metric(num(0)), sym("u"));
  // A_i = -(1/2) psi_i Psi^2
  CHECK(simplify_basic(A[0] + P("Psi^2/2")).is_zero());
  CHECK(A[1].is_zero());
  CHECK(A[2].is_zero());
  CHECK(A[3].is_zero());
}

TEST_CASE("total derivative") {
  Expr F1 = P("u*Psi*Psi_y");
  Expr D = total_derivative(F1, 0);
  CHECK(simplify_basic(D - P("Psi*Psi_y + u*Psi_u*Psi_y + u*Psi*Psi_uy")).is_zero());
  CHECK(jet_var(0, 1) == "Psi_uv");
  CHECK(jet_var(2) == "Psi_y");
}

TEST_CASE("Noether cross-check on known symmetries") {
  Tolerance tol;
  struct Case {
    const char* H;
    const char* xi;
    const char* V;
  };
  std::vector<Case> cases = {
      {"H(u, y, z)", "[0, 1, 0, 0]", "W(u, y, z)"},
      {"0", "[0, 2*v, y, z]", "1/y^2 + 1/z^2"},
      {"0", "[u^2, r^2/2, u*y, u*z]", "V0(y/u, z/u, v - r^2/(2*u))/u^2"},
      {kOscH, kOscC4, "0"},
  };
  for (const auto& cs : cases) {
    Metric g = build_ppwave_metric(P(cs.H));
    VectorField xi = F(cs.xi);
    Expr psi = conformal_factor(g, xi);
    Expr V = P(cs.V);
    INFO(cs.xi);
    REQUIRE(vanishes(kg_symmetry_residual(g, xi, psi, V)));
    SymmetryCandidate c = lift_to_point_symmetry(xi, psi);
    Covector A = noether_gauge(g, psi);
    Sampler js = box(7, 64);
    CHECK(jet_zero_test(noether_condition(g, V, c, A), sample_jets(js), tol).zero());
    auto onshell = sample_onshell_jets(g, V, js);
    CHECK(jet_zero_test(current_divergence(noether_current(g, V, c, A)), onshell, tol).zero());
  }
}

TEST_CASE("Noether condition rejects non-symmetries") {
  Metric g = build_ppwave_metric(num(0));
  VectorField xi = F("[0, 2*v, y, z]");
  SymmetryCandidate c = lift_to_point_symmetry(xi, num(1));
  Covector A = noether_gauge(g, num(1));
  auto jets = sample_jets(box(7, 64));
  CHECK_FALSE(jet_zero_test(noether_condition(g, P("1/y"), c, A), jets, Tolerance{}).zero());
  // wrong gauge for a proper special conformal field
  VectorField s = F("[u^2, r^2/2, u*y, u*z]");
  Covector none{num(0), num(0), num(0), num(0)};
  CHECK_FALSE(
      jet_zero_test(noether_condition(g, num(0), lift_to_point_symmetry(s, sym("u")), none), jets, Tolerance{}).zero());
}

TEST_CASE("current divergence is not identically zero off shell") {
  Metric g = build_ppwave_metric(num(0));
  SymmetryCandidate c = lift_to_point_symmetry(d_u(), num(0));
  Covector A = noether_gauge(g, num(0));
  Expr div = current_divergence(noether_current(g, P("1/y^2"), c, A));
  auto off = sample_jets(box(3, 16));
  auto on = sample_onshell_jets(g, P("1/y^2"), box(3, 16));
  CHECK_FALSE(jet_zero_test(div, off, Tolerance{}).zero());
  CHECK(jet_zero_test(div, on, Tolerance{}).zero());
}

TEST_CASE("structure constants of the Euclidean plane") {
  std::vector<VectorField> basis = {d_y(), d_z(), d_theta()};
  StructureTable t = fit_structure_constants(basis, box(), Tolerance{});
  CHECK(t.dim == 3);
  CHECK(t.rank == 3);
  CHECK(t.all_in_span());
  CHECK(t.constant(0, 2, 1) == doctest::Approx(1.0));   // [d_y, d_theta] = d_z
  CHECK(t.constant(1, 2, 0) == doctest::Approx(-1.0));  // [d_z, d_theta] = -d_y
  CHECK(t.constant(2, 1, 0) == doctest::Approx(1.0));
  CHECK(t.constant(0, 1, 0) == doctest::Approx(0.0));
  CHECK(t.jacobi_defect() < 1e-12);
  for (const auto& p : t.pairs) CHECK(p.residual < 1e-9);
}

TEST_CASE("structure constants detect a non-closing set") {
  std::vector<VectorField> basis = {d_y(), VectorField(num(0), num(0), P("y^2"), num(0))};
  StructureTable t = fit_structure_constants(basis, box(), Tolerance{});
  CHECK_FALSE(t.all_in_span());
}

TEST_CASE("rational rounding") {
  CHECK(round_rational(1.0 / 3.0, 64, 1e-9) == Rational(1, 3));
  CHECK(round_rational(-2.5, 64, 1e-9) == Rational(-5, 2));
  CHECK_FALSE(round_rational(M_PI, 64, 1e-9));
  CHECK(round_rational(0.0, 64, 1e-9) == Rational(0));
}

TEST_CASE("property: fitted constants reproduce brackets in random bases of e(2)") {
  testgen::ExprGen gen(55);
  std::vector<VectorField> e2 = {d_y(), d_z(), d_theta()};
  int tried = 0;
  while (tried < 8) {
    std::int64_t m[3][3];
    for (auto& row : m)
      for (auto& x : row) x = static_cast<std::int64_t>(gen.next(5)) - 2;
    std::int64_t det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (det == 0) continue;
    ++tried;
    std::vector<VectorField> basis(3, VectorField(num(0), num(0), num(0), num(0)));
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) basis[i] = basis[i] + num(m[i][k]) * e2[k];
    StructureTable t = fit_structure_constants(basis, box(tried), Tolerance{});
    CHECK(t.all_in_span());
    CHECK(t.rank == 3);
    CHECK(t.jacobi_defect() < 1e-9);
    Environment env = gen.point();
    for (int I = 0; I < 3; ++I)
      for (int J = I + 1; J < 3; ++J) {
        VectorField br = commutator(basis[I], basis[J]);
        for (int c = 0; c < 4; ++c) {
          double fitted = 0;
          for (int K = 0; K < 3; ++K) fitted += t.constant(I, J, K) * evaluate(basis[K][c], env);
          CHECK(fitted == doctest::Approx(evaluate(br[c], env)).epsilon(1e-9));
        }
      }
  }
}
