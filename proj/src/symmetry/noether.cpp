#include <algorithm>

#include "symmetry/symmetry.hpp"

namespace ppsym {

std::string jet_var() { return "Psi"; }
std::string jet_var(int i) { return "Psi_" + ppwave_chart()[static_cast<std::size_t>(i)]; }
std::string jet_var(int i, int j) {
  if (j < i) std::swap(i, j);
  return "Psi_" + ppwave_chart()[static_cast<std::size_t>(i)] + ppwave_chart()[static_cast<std::size_t>(j)];
}

Expr total_derivative(const Expr& F, int i, const Chart& chart) {
  ExprList terms{differentiate(F, chart[static_cast<std::size_t>(i)])};
  terms.push_back(sym(jet_var(i)) * differentiate(F, jet_var()));
  for (int j = 0; j < kDim; ++j) {
    Expr d = differentiate(F, jet_var(j));
    if (!d.is_zero()) terms.push_back(sym(jet_var(i, j)) * d);
  }
  return Expr::add(std::move(terms));
}

namespace {

std::vector<std::string> first_jet_names() {
  std::vector<std::string> out{jet_var()};
  for (int i = 0; i < kDim; ++i) out.push_back(jet_var(i));
  return out;
}

std::vector<std::string> second_jet_names() {
  std::vector<std::string> out;
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) out.push_back(jet_var(i, j));
  return out;
}

Environment jet_environment(const JetPoint& jet, const Environment& base) {
  Environment env = base;
  for (const auto& [k, v] : jet.values) env.coordinates[k] = v;
  if (!env.jet_source) {
    env.jet_source = [src = Sampler(jet.seed), index = jet.index](const std::string& fn, const MultiIndex& idx) {
      return src.jet_value(index, fn, idx);
    };
  }
  return env;
}

}  // namespace

std::vector<JetPoint> sample_jets(const Sampler& sampler) {
  auto pts = sampler.points();
  std::vector<JetPoint> out;
  out.reserve(pts.size());
  auto names = first_jet_names();
  for (const auto& n : second_jet_names()) names.push_back(n);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    JetPoint jp{pts[k], sampler.seed(), sampler.shared_jets() ? 0 : k};
    for (const auto& n : names) jp.values[n] = sampler.jet_value(k, "jet:" + n, {});
    out.push_back(std::move(jp));
  }
  return out;
}

std::vector<JetPoint> sample_onshell_jets(const Metric& g, const Expr& V, const Sampler& sampler,
                                          const Environment& base) {
  if (!g.ppwave) throw GeometryError("on-shell jets are only defined for pp-wave metrics");
  Expr psi = sym(jet_var());
  Expr rhs = tidy(num(1, 2) * (num(2) * g.H * sym(jet_var(1, 1)) + sym(jet_var(2, 2)) + sym(jet_var(3, 3)) + V * psi),
                  g.rules);
  auto jets = sample_jets(sampler);
  for (std::size_t k = 0; k < jets.size(); ++k) {
    jets[k].values[jet_var(0, 1)] = evaluate(rhs, jet_environment(jets[k], base));
  }
  return jets;
}

Covector noether_gauge(const Metric& g, const Expr& psi) {
  Covector A;
  Expr factor = Expr::number(kg_gauge_factor(kDim)) * g.sqrt_det * pow(sym(jet_var()), num(2));
  for (int i = 0; i < kDim; ++i) A[i] = tidy(factor * differentiate(psi, g.chart[i]), g.rules);
  return A;
}

Expr kg_lagrangian(const Metric& g, const Expr& V) {
  Matrix4 inv = inverse_metric(g);
  ExprList terms;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (!inv[i][j].is_zero()) terms.push_back(inv[i][j] * sym(jet_var(i)) * sym(jet_var(j)));
  Expr kinetic = Expr::add(std::move(terms));
  return simplify_basic(num(1, 2) * g.sqrt_det * (kinetic - V * pow(sym(jet_var()), num(2))));
}

namespace {

std::array<Expr, kDim> raise(const Metric& g, const Covector& A) {
  Matrix4 inv = inverse_metric(g);
  std::array<Expr, kDim> out;
  for (int i = 0; i < kDim; ++i) {
    ExprList t;
    for (int j = 0; j < kDim; ++j)
      if (!inv[i][j].is_zero() && !A[j].is_zero()) t.push_back(inv[i][j] * A[j]);
    out[i] = Expr::add(std::move(t));
  }
  return out;
}

}  // namespace

Expr noether_condition(const Metric& g, const Expr& V, const SymmetryCandidate& c, const Covector& A) {
  const Chart& x = g.chart;
  Expr L = kg_lagrangian(g, V);
  Expr eta = c.psi_coefficient * sym(jet_var());
  ExprList terms;
  for (int i = 0; i < kDim; ++i) terms.push_back(c.xi[i] * differentiate(L, x[i]));
  terms.push_back(eta * differentiate(L, jet_var()));
  for (int i = 0; i < kDim; ++i) {
    ExprList eta_i{total_derivative(eta, i, x)};
    for (int k = 0; k < kDim; ++k) eta_i.push_back(-(sym(jet_var(k)) * total_derivative(c.xi[k], i, x)));
    terms.push_back(Expr::add(std::move(eta_i)) * differentiate(L, jet_var(i)));
  }
  ExprList div_xi;
  for (int i = 0; i < kDim; ++i) div_xi.push_back(total_derivative(c.xi[i], i, x));
  terms.push_back(L * Expr::add(std::move(div_xi)));
  auto Aup = raise(g, A);
  for (int i = 0; i < kDim; ++i) terms.push_back(-total_derivative(Aup[i], i, x));
  return tidy(Expr::add(std::move(terms)), g.rules);
}

ScaledValue evaluate_at_jet(const Expr& e, const JetPoint& jet, const Environment& base) {
  return evaluate_scaled(e, jet_environment(jet, base));
}

double noether_condition_residual(const Metric& g, const Expr& V, const SymmetryCandidate& c, const Covector& A,
                                  const JetPoint& jet, const Environment& base) {
  return evaluate_at_jet(noether_condition(g, V, c, A), jet, base).value;
}

std::array<Expr, kDim> noether_current(const Metric& g, const Expr& V, const SymmetryCandidate& c,
                                       const Covector& A) {
  Expr L = kg_lagrangian(g, V);
  Expr eta = c.psi_coefficient * sym(jet_var());
  auto Aup = raise(g, A);
  std::array<Expr, kDim> out;
  for (int i = 0; i < kDim; ++i) {
    Expr p = differentiate(L, jet_var(i));
    ExprList terms{eta * p, c.xi[i] * L, -Aup[i]};
    for (int j = 0; j < kDim; ++j)
      if (!c.xi[j].is_zero()) terms.push_back(-(c.xi[j] * p * sym(jet_var(j))));
    out[i] = tidy(Expr::add(std::move(terms)), g.rules);
  }
  return out;
}

Expr current_divergence(const std::array<Expr, kDim>& current, const Chart& chart) {
  ExprList terms;
  for (int i = 0; i < kDim; ++i) terms.push_back(total_derivative(current[i], i, chart));
  return simplify_basic(Expr::add(std::move(terms)));
}

ScaledValue onshell_divergence_residual(const std::array<Expr, kDim>& current, const JetPoint& jet,
                                        const Environment& base) {
  return evaluate_at_jet(current_divergence(current), jet, base);
}

ZeroTest jet_zero_test(const Expr& e, const std::vector<JetPoint>& jets, const Tolerance& tol,
                       const Environment& base) {
  ZeroTest out;
  Expr s = simplify_basic(e);
  if (s.is_zero()) return out;
  out.verdict = ZeroVerdict::NumericZero;
  out.samples = jets.size();
  double worst = -1.0;
  for (const auto& jet : jets) {
    ScaledValue sv;
    try {
      sv = evaluate_at_jet(s, jet, base);
    } catch (const EvalError& err) {
      throw NumericFailure(err.what(), jet.values);
    }
    double r = tol.scaled(sv.value, sv.scale);
    out.max_residual = std::max(out.max_residual, r);
    if (!tol.accepts(sv.value, sv.scale) && r > worst) {
      worst = r;
      out.verdict = ZeroVerdict::NonZero;
      out.witness = jet.values;
      out.witness_value = sv.value;
    }
  }
  return out;
}

}  // namespace ppsym
