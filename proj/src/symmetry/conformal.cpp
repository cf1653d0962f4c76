#include <algorithm>

#include "symmetry/symmetry.hpp"

namespace ppsym {

std::string_view conformal_kind_name(ConformalKind k) {
  switch (k) {
    case ConformalKind::Killing: return "Killing";
    case ConformalKind::Homothetic: return "Homothetic";
    case ConformalKind::SpecialConformal: return "SpecialConformal";
    case ConformalKind::ProperConformal: return "ProperConformal";
    case ConformalKind::NotConformal: return "NotConformal";
  }
  return "?";
}

std::optional<ConformalKind> conformal_kind_from_name(std::string_view name) {
  for (auto k : {ConformalKind::Killing, ConformalKind::Homothetic, ConformalKind::SpecialConformal,
                 ConformalKind::ProperConformal, ConformalKind::NotConformal})
    if (conformal_kind_name(k) == name) return k;
  return std::nullopt;
}

double ConformalClass::max_residual() const {
  switch (kind) {
    case ConformalKind::Killing: return std::max(ckv.max_residual, psi_zero.max_residual);
    case ConformalKind::Homothetic: return std::max(ckv.max_residual, gradient.max_residual);
    case ConformalKind::SpecialConformal: return std::max(ckv.max_residual, hessian.max_residual);
    default: return ckv.max_residual;
  }
}

Expr conformal_factor(const Metric& g, const VectorField& xi) {
  return tidy(divergence(g, xi) * num(1, kDim), g.rules);
}

std::vector<Expr> ckv_residuals(const Metric& g, const VectorField& xi, const Expr& psi) {
  Matrix4 L = lie_derivative_metric(g, xi);
  std::vector<Expr> out;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) out.push_back(tidy(L[i][j] - num(2) * psi * g.g[i][j], g.rules));
  return out;
}

ConformalClass classify_conformal(const Metric& g, const VectorField& xi, const Sampler& sampler,
                                  const Tolerance& tol, const Environment& base) {
  ConformalClass out;
  out.psi = conformal_factor(g, xi);
  out.ckv = all_zero(ckv_residuals(g, xi, out.psi), sampler, tol, base);
  if (!out.ckv.zero()) return out;
  out.psi_zero = is_zero(out.psi, sampler, tol, base);
  if (out.psi_zero.zero()) {
    out.kind = ConformalKind::Killing;
    return out;
  }
  std::vector<Expr> grad;
  for (int i = 0; i < kDim; ++i) grad.push_back(tidy(differentiate(out.psi, g.chart[i]), g.rules));
  out.gradient = all_zero(grad, sampler, tol, base);
  if (out.gradient.zero()) {
    out.kind = ConformalKind::Homothetic;
    return out;
  }
  Matrix4 hess = covariant_hessian(g, out.psi);
  std::vector<Expr> comps;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) comps.push_back(hess[i][j]);
  out.hessian = all_zero(comps, sampler, tol, base);
  out.kind = out.hessian.zero() ? ConformalKind::SpecialConformal : ConformalKind::ProperConformal;
  return out;
}

Expr kg_symmetry_residual(const Metric& g, const VectorField& xi, const Expr& psi, const Expr& V) {
  Expr lap = laplace_beltrami(g, psi);
  return tidy(apply_field(xi, V, g.chart) + num(2) * psi * V + Expr::number(kg_field_factor(kDim)) * lap, g.rules);
}

SymmetryCandidate lift_to_point_symmetry(const VectorField& xi, const Expr& psi) {
  return {xi, simplify_basic(Expr::number(kg_field_factor(kDim)) * psi)};
}

}  // namespace ppsym
