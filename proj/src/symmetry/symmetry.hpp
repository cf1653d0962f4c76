#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/zero_test.hpp"
#include "geometry/geometry.hpp"

namespace ppsym {

// Dimension-dependent factors of the Klein-Gordon symmetry conditions, kept together.
inline Rational kg_field_factor(int n) { return Rational(2 - n, 2); }  // Ψ-coefficient per unit ψ
inline Rational kg_gauge_factor(int n) { return Rational(2 - n, 4); }  // gauge A_i per ψ_{,i}Ψ²

enum class ConformalKind { Killing, Homothetic, SpecialConformal, ProperConformal, NotConformal };

std::string_view conformal_kind_name(ConformalKind k);
std::optional<ConformalKind> conformal_kind_from_name(std::string_view name);

struct ConformalClass {
  ConformalKind kind = ConformalKind::NotConformal;
  Expr psi;
  ZeroTest ckv;        // (L_ξ g)_ij - 2ψ g_ij over the 10 independent components
  ZeroTest psi_zero;   // ψ
  ZeroTest gradient;   // ψ_{,i}
  ZeroTest hessian;    // ψ_{;ij}
  /// Largest scaled residual among the tests whose vanishing established the verdict.
  double max_residual() const;
};

ConformalClass classify_conformal(const Metric& g, const VectorField& xi, const Sampler& sampler,
                                  const Tolerance& tol, const Environment& base = {});

/// Conformal factor ψ = ξ^i_{;i} / n.
Expr conformal_factor(const Metric& g, const VectorField& xi);

/// (L_ξ g)_ij - 2ψ g_ij for the 10 independent components (i <= j).
std::vector<Expr> ckv_residuals(const Metric& g, const VectorField& xi, const Expr& psi);

/// ξ^k V_{,k} + 2ψV + ((2-n)/2) Δψ for the equation ΔΨ + VΨ = 0.
Expr kg_symmetry_residual(const Metric& g, const VectorField& xi, const Expr& psi, const Expr& V);

struct SymmetryCandidate {
  VectorField xi;
  /// a(x) in η = a(x) Ψ.
  Expr psi_coefficient;
};

SymmetryCandidate lift_to_point_symmetry(const VectorField& xi, const Expr& psi);

// ---- first/second jet ------------------------------------------------------

std::string jet_var();                 // Psi
std::string jet_var(int i);            // Psi_u, ...
std::string jet_var(int i, int j);     // Psi_uv, ... (chart order)
/// D_i F for F depending on x, Ψ, Ψ_{,j}.
Expr total_derivative(const Expr& F, int i, const Chart& chart = ppwave_chart());

/// Values for coordinates, Ψ, Ψ_{,i} and Ψ_{,ij}, keyed by the jet variable names.
struct JetPoint {
  Point values;
  /// Source of values for uninstantiated functions at this point.
  std::uint64_t seed = 0;
  std::size_t index = 0;
};

/// Off-shell jet points: coordinates from the sampler, jet values uniform in [-1, 1].
std::vector<JetPoint> sample_jets(const Sampler& sampler);
/// On-shell jet points: Ψ_{,uv} solved from ΔΨ + VΨ = 0 on a pp-wave metric.
std::vector<JetPoint> sample_onshell_jets(const Metric& g, const Expr& V, const Sampler& sampler,
                                          const Environment& base = {});

/// A_i = ((2-n)/4) √g ψ_{,i} Ψ²
Covector noether_gauge(const Metric& g, const Expr& psi);

/// Lagrangian ½√g g^{ij}Ψ_iΨ_j − ½√g VΨ² in jet variables.
Expr kg_lagrangian(const Metric& g, const Expr& V);

/// Left minus right side of X^[1]L + L D_iξ^i = D_i A^i as a first-jet expression.
Expr noether_condition(const Metric& g, const Expr& V, const SymmetryCandidate& c, const Covector& A);

/// Evaluates a jet expression at a jet point.
ScaledValue evaluate_at_jet(const Expr& e, const JetPoint& jet, const Environment& base = {});

double noether_condition_residual(const Metric& g, const Expr& V, const SymmetryCandidate& c, const Covector& A,
                                  const JetPoint& jet, const Environment& base = {});

/// I^i = η p^i − ξ^j (p^i Ψ_j − L δ^i_j) − A^i (upper index), with p^i = ∂L/∂Ψ_i.
std::array<Expr, kDim> noether_current(const Metric& g, const Expr& V, const SymmetryCandidate& c, const Covector& A);

/// D_i I^i as a second-jet expression.
Expr current_divergence(const std::array<Expr, kDim>& current, const Chart& chart = ppwave_chart());

ScaledValue onshell_divergence_residual(const std::array<Expr, kDim>& current, const JetPoint& jet,
                                        const Environment& base = {});

/// Joint zero test of a jet expression over a list of jet points.
ZeroTest jet_zero_test(const Expr& e, const std::vector<JetPoint>& jets, const Tolerance& tol,
                       const Environment& base = {});

// ---- structure constants ------------------------------------------------------

struct PairFit {
  int i = 0;
  int j = 0;
  std::vector<double> coefficients;            // C^K_{ij}
  std::vector<std::optional<Rational>> exact;  // rational rounding when it succeeded
  double residual = 0.0;                       // max scaled residual after rounding
  bool in_span = true;
};

struct StructureTable {
  std::size_t dim = 0;
  std::vector<PairFit> pairs;  // i < j
  std::size_t rank = 0;
  /// C^K_{IJ}, antisymmetric by construction.
  double constant(int I, int J, int K) const;
  /// max |Σ_M C^M_IJ C^L_MK + cyclic| over all I, J, K, L
  double jacobi_defect() const;
  bool all_in_span() const;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

StructureTable fit_structure_constants(const std::vector<VectorField>& basis, const Sampler& sampler,
                                       const Tolerance& tol, const std::vector<RewriteRule>& rules = {},
                                       const Environment& base = {});

/// Nearest rational with denominator <= max_den, if it lies within tolerance.
std::optional<Rational> round_rational(double x, std::int64_t max_den, double tol);

}  // namespace ppsym
