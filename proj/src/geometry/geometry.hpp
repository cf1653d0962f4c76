#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/calculus.hpp"
#include "core/expr.hpp"
#include "core/parse.hpp"

namespace ppsym {

inline constexpr int kDim = 4;
using Chart = std::array<std::string, kDim>;
using Matrix4 = std::array<std::array<Expr, kDim>, kDim>;
using Covector = std::array<Expr, kDim>;

const Chart& ppwave_chart();  // (u, v, y, z)

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VectorField {
  std::array<Expr, kDim> c;

  VectorField() = default;
  VectorField(Expr cu, Expr cv, Expr cy, Expr cz) : c{std::move(cu), std::move(cv), std::move(cy), std::move(cz)} {}

  const Expr& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  Expr& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Expr& s, const VectorField& a);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.c == b.c; }
};

// Polar and rotated-frame fields written in Cartesian components.
VectorField d_u();
VectorField d_v();
VectorField d_y();
VectorField d_z();
VectorField d_theta();  // -z d_y + y d_z
VectorField r_d_r();    // y d_y + z d_z
VectorField d_r();      // (y d_y + z d_z) / r

struct Metric {
  Chart chart = ppwave_chart();
  Matrix4 g;
  /// sqrt|det g|; exactly 1 for pp-wave builds.
  Expr sqrt_det = num(1);
  /// Profile function when built from a pp-wave H.
  Expr H;
  bool ppwave = false;
  /// Differential constraints on function symbols appearing in the metric.
  std::vector<RewriteRule> rules;
};

Metric build_ppwave_metric(const Expr& H, std::vector<RewriteRule> rules = {});
/// Generic metric from components; sqrt_det computed as sqrt(-det g) (Lorentzian).
Metric make_metric(const Matrix4& g, std::vector<RewriteRule> rules = {});

Expr determinant(const Matrix4& m);
Matrix4 inverse_metric(const Metric& g);

using Connection = std::array<Matrix4, kDim>;  // gamma[i][j][k] = Γ^i_{jk}
Connection christoffel(const Metric& g);

Expr laplace_beltrami(const Metric& g, const Expr& f);
/// The pp-wave closed form -2 f_uv + 2 H f_vv + f_yy + f_zz.
Expr ppwave_laplacian(const Expr& H, const Expr& f);
Matrix4 lie_derivative_metric(const Metric& g, const VectorField& xi);
Matrix4 covariant_hessian(const Metric& g, const Expr& f);
Expr divergence(const Metric& g, const VectorField& xi);
VectorField commutator(const VectorField& X, const VectorField& Y, const std::vector<RewriteRule>& rules = {});
/// ξ^i ∂_i f
Expr apply_field(const VectorField& xi, const Expr& f, const Chart& chart = ppwave_chart());
/// H_yy + H_zz
Expr transverse_laplacian(const Expr& H);

Expr tidy(const Expr& e, const std::vector<RewriteRule>& rules);

/// Parses a bracketed 4-tuple "[e_u, e_v, e_y, e_z]"; ParseError offsets refer to the whole text.
VectorField parse_field(std::string_view text, const ParseOptions& options = {});
std::string to_string(const VectorField& xi);

}  // namespace ppsym
