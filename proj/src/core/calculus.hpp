#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "expr.hpp"

namespace ppsym {

/// Closed-form body for a function symbol, written in the formal arguments x1..xN.
struct FunctionBody {
  int arity = 1;
  Expr body;
};

using Instantiation = std::map<std::string, FunctionBody>;

/// F^(threshold + k)(args) is replaced by the k-th derivative of `replacement`
/// (an expression in x1..xN) evaluated at args, for every k >= 0 componentwise.
struct RewriteRule {
  FunctionSymbol fn;
  MultiIndex threshold;
  Expr replacement;
};

Expr differentiate(const Expr& e, std::string_view var);
/// Differentiates repeatedly: index[k] times with respect to vars[k].
Expr differentiate(const Expr& e, const std::vector<std::string>& vars, const MultiIndex& index);

/// Simultaneous, non-recursive substitution of symbols, then canonicalization.
Expr substitute(const Expr& e, const Bindings& bindings);

/// Replaces every Apply/DerivApply of an instantiated symbol by its (differentiated) body.
Expr instantiate(const Expr& e, const Instantiation& inst);

/// Rewrites to a fixed point; throws std::runtime_error when max_iterations is exceeded.
Expr apply_rewrites(const Expr& e, const std::vector<RewriteRule>& rules, int max_iterations = 64);

/// Expands products and small integer powers of sums (bounded by max_terms per product)
/// and re-canonicalizes, so that like terms hidden inside products get collected.
Expr simplify_basic(const Expr& e, std::size_t max_terms = 64);

/// Rebuilds a node of the same kind as `like` over new children through the canonical constructors.
Expr rebuild(const Expr& like, ExprList args);

}  // namespace ppsym
