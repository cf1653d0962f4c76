#include "zero_test.hpp"

#include <algorithm>

#include "calculus.hpp"

namespace ppsym {

std::string_view verdict_name(ZeroVerdict v) {
  switch (v) {
    case ZeroVerdict::SymbolicZero: return "SymbolicZero";
    case ZeroVerdict::NumericZero: return "NumericZero";
    case ZeroVerdict::NonZero: return "NonZero";
  }
  return "?";
}

ZeroTest is_zero(const Expr& e, const Sampler& sampler, const Tolerance& tol, const Environment& base) {
  return all_zero({e}, sampler, tol, base);
}

ZeroTest all_zero(const std::vector<Expr>& es, const Sampler& sampler, const Tolerance& tol,
                  const Environment& base) {
  ZeroTest out;
  std::vector<std::pair<std::size_t, Expr>> open;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].is_zero()) continue;
    Expr s = simplify_basic(es[i]);
    if (!s.is_zero()) open.emplace_back(i, std::move(s));
  }
  if (open.empty()) return out;
  out.verdict = ZeroVerdict::NumericZero;
  const auto pts = sampler.points();
  out.samples = pts.size();
  bool failed = false;
  double worst = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    Environment env = sampler.environment(base, k, pts[k]);
    for (const auto& [idx, expr] : open) {
      ScaledValue sv;
      try {
        sv = evaluate_scaled(expr, env);
      } catch (const EvalError& err) {
        throw NumericFailure(err.what(), pts[k]);
      }
      double r = tol.scaled(sv.value, sv.scale);
      bool ok = tol.accepts(sv.value, sv.scale);
      if (!ok && (!failed || r > worst)) {
        failed = true;
        worst = r;
        out.witness = pts[k];
        out.witness_value = sv.value;
        out.witness_component = idx;
      }
      out.max_residual = std::max(out.max_residual, r);
    }
  }
  if (failed) out.verdict = ZeroVerdict::NonZero;
  return out;
}

}  // namespace ppsym
