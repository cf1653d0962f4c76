#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/sampling.hpp"
#include "geometry/geometry.hpp"
#include "symmetry/symmetry.hpp"

namespace ppsym {

class CatalogError : public std::runtime_error {
 public:
  enum class Reason { UnknownClass, BadParameter, Constraint, DivisionByZero, UnknownFamily };
  CatalogError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

using ParameterMap = std::map<std::string, Rational>;

struct Generator {
  std::string name;   // identifier used in commutator formulas ("X3", "S4", ...)
  std::string label;  // display form, e.g. X_3^(5)
  std::string printed_text;
  std::string corrected_text;  // empty: the printed form stands
  VectorField printed;
  std::optional<VectorField> corrected;
  ConformalKind kind = ConformalKind::Killing;
  std::optional<Expr> printed_psi;  // absent when no value is stated
  std::optional<Expr> corrected_psi;
  std::string note;
  /// Participates in the structure-constant fit.
  bool fit = true;
  /// Unlisted brackets with other tabled generators are expected to vanish.
  bool tabled = true;
  /// Checked against the class rules as printed before the corrected rules.
  bool uses_printed_rules = false;

  const VectorField& field() const { return corrected ? *corrected : printed; }
  bool amended() const { return corrected.has_value() || corrected_psi.has_value(); }
};

struct PotentialFamily {
  std::string name;  // "V_G", "V_3", ...
  std::vector<std::pair<std::size_t, Expr>> combination;  // generator index, coefficient
  std::string printed_text;
  std::string corrected_text;
  Expr printed;  // uses the outer function V(a, b, c)
  std::optional<Expr> corrected;
  std::string note;

  const Expr& potential() const { return corrected ? *corrected : printed; }
};

struct ExpectedCommutator {
  std::size_t a = 0;
  std::size_t b = 0;
  std::string printed_text;
  std::string corrected_text;
  Expr printed;  // linear in generator-name symbols
  std::optional<Expr> corrected;
  std::string note;
};

struct Exclusion {
  Expr expr;
  double min_abs = 0.1;  // keep points with |expr| >= min_abs
};

struct PPWaveClass {
  std::string id;
  std::string title;
  ParameterMap params;
  std::map<std::string, int> functions;  // free function symbols in H and in the generators
  Expr H;
  std::vector<RewriteRule> rules;
  std::vector<RewriteRule> printed_rules;  // differential constraints as printed, when they differ
  std::vector<Interval> box;
  std::vector<Exclusion> exclusions;
  bool shared_jets = false;
  std::vector<Generator> generators;
  std::vector<PotentialFamily> potentials;
  std::vector<ExpectedCommutator> commutators;
  int table5_printed = 0;
  int table5_corrected = -1;  // -1: printed count stands
  std::string table5_note;
  std::vector<std::string> parameter_constraints;  // "expr != 0" / "expr > 0"

  Metric metric() const;
  Metric printed_metric() const;
  Sampler sampler(std::uint64_t seed, std::size_t count) const;
  std::optional<std::size_t> find_generator(const std::string& name) const;
  int table5_expected() const { return table5_corrected >= 0 ? table5_corrected : table5_printed; }
};

/// All cataloged ids in catalog order.
const std::vector<std::string>& class_ids();

/// Accepts the ASCII ids ("2i(q=-1)", "2ii(Theta=0)", "8(delta=0)") and their Unicode spellings.
std::string normalize_class_id(const std::string& id);

PPWaveClass get_class(const std::string& id, const ParameterMap& overrides = {});

/// Default outer-function bodies x1 + x2 x3, sin(x1) + x2^2, exp(x3/5) x1.
const std::vector<FunctionBody>& default_potential_bodies();

/// Potential family `family` with V replaced by `body`; `constants` override c1..c6 and other parameters.
Expr instantiate_potential(const std::string& id, const std::string& family, const FunctionBody& body,
                           const ParameterMap& constants = {}, bool corrected = true);

/// Four independent solutions (d_a, e_a) of d'' = -(A d + B e), e'' = -(B d + C e) for constant A, B, C.
std::vector<std::pair<Expr, Expr>> solve_plane_wave_basis(const Expr& A, const Expr& B, const Expr& C);

/// Δ_δ H = H_yy + H_zz zero test.
ZeroTest vacuum_check(const Expr& H, const Sampler& sampler, const Tolerance& tol,
                      const std::vector<RewriteRule>& rules = {});

/// Every class at default parameters as JSON: H, rules, generators, potentials, expected tables.
std::string catalog_json();

/// Parses "3/5", "-2", "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace ppsym
