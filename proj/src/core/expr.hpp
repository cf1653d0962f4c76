#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace ppsym {

enum class Kind : std::uint8_t {
  Integer,
  Rational,
  Real,
  Symbol,
  Apply,
  DerivApply,
  Builtin,
  Pow,
  Mul,
  Add,
};

enum class BuiltinFn : std::uint8_t { Sin, Cos, Tan, Exp, Ln, Sqrt, Arctan, Arctan2 };

std::string_view builtin_name(BuiltinFn fn);
std::optional<BuiltinFn> builtin_from_name(std::string_view name);
int builtin_arity(BuiltinFn fn);

/// A named function of fixed arity whose body is unknown unless instantiated.
struct FunctionSymbol {
  std::string name;
  int arity = 1;

  friend bool operator==(const FunctionSymbol& a, const FunctionSymbol& b) {
    return a.name == b.name && a.arity == b.arity;
  }
};

/// Conventional formal argument names x1, x2, ... used by instantiation bodies and rewrite rules.
std::string formal_arg(int slot);  // slot 0 -> x1

class Expr;
using ExprList = std::vector<Expr>;
using MultiIndex = std::vector<int>;

class Node;

/// Immutable, canonical symbolic expression.
///
/// Every constructor canonicalizes: sums and products are flattened, sorted and have
/// like terms / equal bases merged, numeric subterms are folded and rationals stay exact.
/// Expressions are cheap to copy (shared immutable nodes) and safe to share across threads.
class Expr {
 public:
  Expr();  // integer zero

  static Expr integer(std::int64_t n);
  static Expr number(const Rational& q);
  static Expr real(double x);
  static Expr symbol(std::string name);
  static Expr add(ExprList terms);
  static Expr mul(ExprList factors);
  static Expr pow(const Expr& base, const Expr& exponent);
  static Expr apply(const FunctionSymbol& fn, ExprList args);
  static Expr deriv(const FunctionSymbol& fn, MultiIndex index, ExprList args);
  static Expr builtin(BuiltinFn fn, ExprList args);

  Kind kind() const;
  bool is_number() const;      // Integer, Rational or Real
  bool is_rational() const;    // Integer or Rational
  bool is_zero() const;
  bool is_one() const;
  Rational rational() const;   // requires is_rational()
  double number_value() const; // requires is_number()
  const std::string& name() const;  // Symbol / Apply / DerivApply
  int arity() const;                // Apply / DerivApply
  FunctionSymbol function() const;  // Apply / DerivApply
  BuiltinFn builtin_fn() const;
  const MultiIndex& index() const;  // DerivApply
  const ExprList& args() const;     // Add/Mul terms, Pow {base, exp}, function arguments
  const Expr& base() const;         // Pow
  const Expr& exponent() const;     // Pow
  std::size_t hash() const;

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
  friend bool operator<(const Expr& a, const Expr& b);

  Expr operator-() const;
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
  friend class Node;
};

/// Total structural order used for canonical sorting: negative, zero or positive.
int compare(const Expr& a, const Expr& b);

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

// Convenience builders.
Expr num(std::int64_t n);
Expr num(std::int64_t n, std::int64_t d);
Expr sym(std::string name);
Expr pow(const Expr& b, const Expr& e);
Expr sqrt(const Expr& e);
Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr tan(const Expr& e);
Expr exp(const Expr& e);
Expr ln(const Expr& e);
Expr arctan(const Expr& e);
Expr arctan2(const Expr& y, const Expr& x);

// Splits a term into numeric coefficient and the remaining non-numeric part.
std::pair<Expr, Expr> split_coefficient(const Expr& term);

// Structural queries.
bool depends_on(const Expr& e, std::string_view symbol);
bool contains_function(const Expr& e, std::string_view fn_name);
void collect_symbols(const Expr& e, std::vector<std::string>& out);
/// Every (function, derivative index) pair that appears as Apply/DerivApply (Apply has an all-zero index).
void collect_jets(const Expr& e, std::vector<std::pair<FunctionSymbol, MultiIndex>>& out);
std::size_t node_count(const Expr& e);

using Bindings = std::map<std::string, Expr>;

}  // namespace ppsym
