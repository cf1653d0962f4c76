#include "geometry/geometry.hpp"

namespace ppsym {

const Chart& ppwave_chart() {
  static const Chart c{"u", "v", "y", "z"};
  return c;
}

Expr tidy(const Expr& e, const std::vector<RewriteRule>& rules) {
  return simplify_basic(rules.empty() ? e : apply_rewrites(e, rules));
}

bool VectorField::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField out;
  for (int i = 0; i < kDim; ++i) out[i] = a[i] + b[i];
  return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  VectorField out;
  for (int i = 0; i < kDim; ++i) out[i] = a[i] - b[i];
  return out;
}

VectorField operator*(const Expr& s, const VectorField& a) {
  VectorField out;
  for (int i = 0; i < kDim; ++i) out[i] = s * a[i];
  return out;
}

VectorField d_u() { return {num(1), num(0), num(0), num(0)}; }
VectorField d_v() { return {num(0), num(1), num(0), num(0)}; }
VectorField d_y() { return {num(0), num(0), num(1), num(0)}; }
VectorField d_z() { return {num(0), num(0), num(0), num(1)}; }
VectorField d_theta() { return {num(0), num(0), -sym("z"), sym("y")}; }
VectorField r_d_r() { return {num(0), num(0), sym("y"), sym("z")}; }
VectorField d_r() {
  Expr inv_r = pow(pow(sym("y"), num(2)) + pow(sym("z"), num(2)), num(-1, 2));
  return {num(0), num(0), sym("y") * inv_r, sym("z") * inv_r};
}

Metric build_ppwave_metric(const Expr& H, std::vector<RewriteRule> rules) {
  if (!tidy(differentiate(H, "v"), rules).is_zero()) throw GeometryError("pp-wave profile H must not depend on v");
  Metric m;
  for (auto& row : m.g)
    for (auto& x : row) x = num(0);
  m.g[0][0] = num(-2) * H;
  m.g[0][1] = m.g[1][0] = num(-1);
  m.g[2][2] = m.g[3][3] = num(1);
  m.H = H;
  m.ppwave = true;
  m.rules = std::move(rules);
  if (!simplify_basic(determinant(m.g) + num(1)).is_zero()) throw GeometryError("pp-wave determinant is not -1");
  m.sqrt_det = num(1);
  return m;
}

Metric make_metric(const Matrix4& g, std::vector<RewriteRule> rules) {
  Metric m;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (simplify_basic(g[i][j] - g[j][i]) != num(0)) throw GeometryError("metric components are not symmetric");
  m.g = g;
  m.rules = std::move(rules);
  m.sqrt_det = sqrt(simplify_basic(-determinant(g)));
  return m;
}

namespace {

Expr det3(const Matrix4& m, int skip_row, int skip_col) {
  int r[3], c[3];
  for (int i = 0, k = 0; i < kDim; ++i)
    if (i != skip_row) r[k++] = i;
  for (int j = 0, k = 0; j < kDim; ++j)
    if (j != skip_col) c[k++] = j;
  auto at = [&](int i, int j) -> const Expr& { return m[r[i]][c[j]]; };
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) - at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

}  // namespace

Expr determinant(const Matrix4& m) {
  ExprList terms;
  for (int j = 0; j < kDim; ++j) {
    if (m[0][j].is_zero()) continue;
    Expr t = m[0][j] * det3(m, 0, j);
    terms.push_back(j % 2 ? -t : t);
  }
  return simplify_basic(Expr::add(std::move(terms)));
}

Matrix4 inverse_metric(const Metric& g) {
  Expr det = determinant(g.g);
  if (det.is_zero()) throw GeometryError("metric is symbolically singular");
  Expr inv_det = pow(det, num(-1));
  Matrix4 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      Expr cof = det3(g.g, j, i);
      out[i][j] = simplify_basic((i + j) % 2 ? -(cof * inv_det) : cof * inv_det);
    }
  return out;
}

Connection christoffel(const Metric& g) {
  Matrix4 inv = inverse_metric(g);
  const Chart& x = g.chart;
  // dg[l][j][k] = g_{lj,k}
  std::array<Matrix4, kDim> dg;
  for (int l = 0; l < kDim; ++l)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) dg[l][j][k] = differentiate(g.g[l][j], x[k]);
  Connection gamma;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = j; k < kDim; ++k) {
        ExprList terms;
        for (int l = 0; l < kDim; ++l) {
          if (inv[i][l].is_zero()) continue;
          terms.push_back(inv[i][l] * (dg[l][j][k] + dg[l][k][j] - dg[j][k][l]));
        }
        Expr v = tidy(num(1, 2) * Expr::add(std::move(terms)), g.rules);
        gamma[i][j][k] = v;
        gamma[i][k][j] = v;
      }
  return gamma;
}

Expr laplace_beltrami(const Metric& g, const Expr& f) {
  Matrix4 inv = inverse_metric(g);
  const Chart& x = g.chart;
  std::array<Expr, kDim> df;
  for (int j = 0; j < kDim; ++j) df[j] = differentiate(f, x[j]);
  ExprList terms;
  for (int i = 0; i < kDim; ++i) {
    ExprList flux;
    for (int j = 0; j < kDim; ++j)
      if (!inv[i][j].is_zero()) flux.push_back(g.sqrt_det * inv[i][j] * df[j]);
    terms.push_back(differentiate(Expr::add(std::move(flux)), x[i]));
  }
  return tidy(Expr::add(std::move(terms)) / g.sqrt_det, g.rules);
}

Expr ppwave_laplacian(const Expr& H, const Expr& f) {
  auto d = [](const Expr& e, const char* a, const char* b) { return differentiate(differentiate(e, a), b); };
  return simplify_basic(num(-2) * d(f, "u", "v") + num(2) * H * d(f, "v", "v") + d(f, "y", "y") + d(f, "z", "z"));
}

Matrix4 lie_derivative_metric(const Metric& g, const VectorField& xi) {
  const Chart& x = g.chart;
  std::array<std::array<Expr, kDim>, kDim> dxi;  // dxi[k][i] = ξ^k_{,i}
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i) dxi[k][i] = differentiate(xi[k], x[i]);
  Matrix4 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      ExprList terms;
      for (int k = 0; k < kDim; ++k) {
        terms.push_back(xi[k] * differentiate(g.g[i][j], x[k]));
        terms.push_back(g.g[k][j] * dxi[k][i]);
        terms.push_back(g.g[i][k] * dxi[k][j]);
      }
      out[i][j] = out[j][i] = tidy(Expr::add(std::move(terms)), g.rules);
    }
  return out;
}

Matrix4 covariant_hessian(const Metric& g, const Expr& f) {
  Connection gamma = christoffel(g);
  const Chart& x = g.chart;
  std::array<Expr, kDim> df;
  for (int k = 0; k < kDim; ++k) df[k] = differentiate(f, x[k]);
  Matrix4 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      ExprList terms{differentiate(df[i], x[j])};
      for (int k = 0; k < kDim; ++k)
        if (!gamma[k][i][j].is_zero()) terms.push_back(-(gamma[k][i][j] * df[k]));
      out[i][j] = out[j][i] = tidy(Expr::add(std::move(terms)), g.rules);
    }
  return out;
}

Expr divergence(const Metric& g, const VectorField& xi) {
  ExprList terms;
  for (int i = 0; i < kDim; ++i) terms.push_back(differentiate(g.sqrt_det * xi[i], g.chart[i]));
  return tidy(Expr::add(std::move(terms)) / g.sqrt_det, g.rules);
}

Expr apply_field(const VectorField& xi, const Expr& f, const Chart& chart) {
  ExprList terms;
  for (int i = 0; i < kDim; ++i)
    if (!xi[i].is_zero()) terms.push_back(xi[i] * differentiate(f, chart[i]));
  return Expr::add(std::move(terms));
}

VectorField commutator(const VectorField& X, const VectorField& Y, const std::vector<RewriteRule>& rules) {
  VectorField out;
  for (int i = 0; i < kDim; ++i) out[i] = tidy(apply_field(X, Y[i]) - apply_field(Y, X[i]), rules);
  return out;
}

Expr transverse_laplacian(const Expr& H) {
  return simplify_basic(differentiate(differentiate(H, "y"), "y") + differentiate(differentiate(H, "z"), "z"));
}

}  // namespace ppsym

namespace ppsym {

VectorField parse_field(std::string_view text, const ParseOptions& options) {
  std::size_t open = text.find_first_not_of(" \t\r\n");
  if (open == std::string_view::npos || text[open] != '[')
    throw ParseError(ParseError::Reason::Syntax, open == std::string_view::npos ? text.size() + 1 : open + 1,
                     "vector field must be written as [e_u, e_v, e_y, e_z]");
  std::size_t close = text.find_last_not_of(" \t\r\n");
  if (text[close] != ']' || close <= open)
    throw ParseError(ParseError::Reason::Syntax, close + 1, "missing closing ']'");
  std::vector<std::pair<std::size_t, std::size_t>> parts;  // [begin, end)
  int depth = 0;
  std::size_t begin = open + 1;
  for (std::size_t i = open + 1; i < close; ++i) {
    char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      parts.emplace_back(begin, i);
      begin = i + 1;
    }
  }
  parts.emplace_back(begin, close);
  if (parts.size() != kDim)
    throw ParseError(ParseError::Reason::Arity, open + 1,
                     "vector field needs 4 components, got " + std::to_string(parts.size()));
  VectorField xi;
  for (int k = 0; k < kDim; ++k) {
    auto [b, e] = parts[static_cast<std::size_t>(k)];
    try {
      xi[k] = parse(text.substr(b, e - b), options);
    } catch (const ParseError& err) {
      std::string msg = err.what();
      msg = msg.substr(0, msg.rfind(" at offset "));
      throw ParseError(err.reason(), err.offset() + b, msg);
    }
  }
  return xi;
}

std::string to_string(const VectorField& xi) {
  std::string out = "[";
  for (int k = 0; k < kDim; ++k) {
    if (k) out += ", ";
    out += to_string(xi[k]);
  }
  return out + "]";
}

}  // namespace ppsym
