#include "calculus.hpp"

#include <stdexcept>

namespace ppsym {

Expr rebuild(const Expr& like, ExprList args) {
  switch (like.kind()) {
    case Kind::Add:
      return Expr::add(std::move(args));
    case Kind::Mul:
      return Expr::mul(std::move(args));
    case Kind::Pow:
      return Expr::pow(args.at(0), args.at(1));
    case Kind::Apply:
      return Expr::apply(like.function(), std::move(args));
    case Kind::DerivApply:
      return Expr::deriv(like.function(), like.index(), std::move(args));
    case Kind::Builtin:
      return Expr::builtin(like.builtin_fn(), std::move(args));
    default:
      return like;
  }
}

namespace {

Expr chain_rule(const Expr& e, std::string_view var) {
  const FunctionSymbol fn = e.function();
  ExprList terms;
  for (std::size_t k = 0; k < e.args().size(); ++k) {
    Expr da = differentiate(e.args()[k], var);
    if (da.is_zero()) continue;
    MultiIndex idx = e.index();
    idx[k] += 1;
    terms.push_back(Expr::deriv(fn, std::move(idx), e.args()) * da);
  }
  return Expr::add(std::move(terms));
}

Expr diff_builtin(const Expr& e, std::string_view var) {
  const Expr& a = e.args()[0];
  if (e.builtin_fn() == BuiltinFn::Arctan2) {
    const Expr& x = e.args()[1];
    Expr dy = differentiate(a, var), dx = differentiate(x, var);
    if (dy.is_zero() && dx.is_zero()) return num(0);
    return (x * dy - a * dx) / (pow(x, num(2)) + pow(a, num(2)));
  }
  Expr da = differentiate(a, var);
  if (da.is_zero()) return num(0);
  switch (e.builtin_fn()) {
    case BuiltinFn::Sin:
      return cos(a) * da;
    case BuiltinFn::Cos:
      return -(sin(a) * da);
    case BuiltinFn::Tan:
      return pow(cos(a), num(-2)) * da;
    case BuiltinFn::Exp:
      return e * da;
    case BuiltinFn::Ln:
      return da / a;
    case BuiltinFn::Sqrt:
      return num(1, 2) * pow(a, num(-1, 2)) * da;
    case BuiltinFn::Arctan:
      return da / (num(1) + pow(a, num(2)));
    default:
      throw std::logic_error("unhandled builtin");
  }
}

}  // namespace

Expr differentiate(const Expr& e, std::string_view var) {
  switch (e.kind()) {
    case Kind::Integer:
    case Kind::Rational:
    case Kind::Real:
      return num(0);
    case Kind::Symbol:
      return num(e.name() == var ? 1 : 0);
    case Kind::Add: {
      ExprList terms;
      for (const auto& t : e.args()) terms.push_back(differentiate(t, var));
      return Expr::add(std::move(terms));
    }
    case Kind::Mul: {
      const auto& f = e.args();
      ExprList terms;
      for (std::size_t i = 0; i < f.size(); ++i) {
        Expr d = differentiate(f[i], var);
        if (d.is_zero()) continue;
        ExprList prod;
        for (std::size_t j = 0; j < f.size(); ++j) prod.push_back(j == i ? d : f[j]);
        terms.push_back(Expr::mul(std::move(prod)));
      }
      return Expr::add(std::move(terms));
    }
    case Kind::Pow: {
      const Expr& b = e.base();
      const Expr& x = e.exponent();
      Expr db = differentiate(b, var);
      if (!depends_on(x, var)) {
        if (db.is_zero()) return num(0);
        return x * pow(b, x - num(1)) * db;
      }
      Expr dx = differentiate(x, var);
      return e * (dx * ln(b) + x * db / b);
    }
    case Kind::Apply:
    case Kind::DerivApply:
      return chain_rule(e, var);
    case Kind::Builtin:
      return diff_builtin(e, var);
  }
  return num(0);
}

Expr differentiate(const Expr& e, const std::vector<std::string>& vars, const MultiIndex& index) {
  Expr out = e;
  for (std::size_t k = 0; k < index.size() && k < vars.size(); ++k)
    for (int n = 0; n < index[k]; ++n) out = differentiate(out, vars[k]);
  return out;
}

Expr substitute(const Expr& e, const Bindings& bindings) {
  if (bindings.empty()) return e;
  if (e.kind() == Kind::Symbol) {
    auto it = bindings.find(e.name());
    return it == bindings.end() ? e : it->second;
  }
  if (e.args().empty()) return e;
  ExprList args;
  args.reserve(e.args().size());
  bool changed = false;
  for (const auto& a : e.args()) {
    args.push_back(substitute(a, bindings));
    changed = changed || args.back() != a;
  }
  return changed ? rebuild(e, std::move(args)) : e;
}

namespace {

std::vector<std::string> formal_args(int arity) {
  std::vector<std::string> out;
  for (int k = 0; k < arity; ++k) out.push_back(formal_arg(k));
  return out;
}

Expr bind_formals(const Expr& body, const ExprList& actual) {
  Bindings b;
  for (std::size_t k = 0; k < actual.size(); ++k) b.emplace(formal_arg(static_cast<int>(k)), actual[k]);
  return substitute(body, b);
}

}  // namespace

Expr instantiate(const Expr& e, const Instantiation& inst) {
  if (inst.empty() || e.args().empty()) return e;
  ExprList args;
  args.reserve(e.args().size());
  for (const auto& a : e.args()) args.push_back(instantiate(a, inst));
  if (e.kind() == Kind::Apply || e.kind() == Kind::DerivApply) {
    auto it = inst.find(e.name());
    if (it != inst.end()) {
      if (it->second.arity != e.arity())
        throw std::invalid_argument("instantiation of " + e.name() + " has arity " + std::to_string(it->second.arity) +
                                    ", expected " + std::to_string(e.arity()));
      Expr body = differentiate(it->second.body, formal_args(e.arity()), e.index());
      return bind_formals(body, args);
    }
  }
  return rebuild(e, std::move(args));
}

namespace {

const RewriteRule* matching_rule(const Expr& e, const std::vector<RewriteRule>& rules) {
  if (e.kind() != Kind::DerivApply) return nullptr;
  for (const auto& r : rules) {
    if (r.fn.name != e.name() || r.fn.arity != e.arity()) continue;
    bool ge = true;
    for (std::size_t k = 0; k < r.threshold.size(); ++k) ge = ge && e.index()[k] >= r.threshold[k];
    if (ge) return &r;
  }
  return nullptr;
}

Expr rewrite_once(const Expr& e, const std::vector<RewriteRule>& rules, bool& changed) {
  if (e.args().empty()) return e;
  ExprList args;
  args.reserve(e.args().size());
  bool local = false;
  for (const auto& a : e.args()) {
    args.push_back(rewrite_once(a, rules, changed));
    local = local || args.back() != a;
  }
  if (const RewriteRule* r = matching_rule(e, rules)) {
    MultiIndex extra = e.index();
    for (std::size_t k = 0; k < extra.size(); ++k) extra[k] -= r->threshold[k];
    Expr body = differentiate(r->replacement, formal_args(e.arity()), extra);
    changed = true;
    return bind_formals(body, args);
  }
  if (!local) return e;
  changed = true;
  return rebuild(e, std::move(args));
}

}  // namespace

Expr apply_rewrites(const Expr& e, const std::vector<RewriteRule>& rules, int max_iterations) {
  if (rules.empty()) return e;
  Expr cur = e;
  for (int it = 0; it < max_iterations; ++it) {
    bool changed = false;
    cur = rewrite_once(cur, rules, changed);
    if (!changed) return cur;
  }
  throw std::runtime_error("rewrite iteration cap exceeded");
}

namespace {

ExprList terms_of(const Expr& e) {
  if (e.kind() == Kind::Add) return e.args();
  return {e};
}

Expr distribute(const ExprList& factors, std::size_t max_terms) {
  std::size_t total = 1;
  for (const auto& a : factors) {
    total *= terms_of(a).size();
    if (total > max_terms) return Expr::mul(factors);
  }
  if (total <= 1) return Expr::mul(factors);
  ExprList acc{num(1)};
  for (const auto& a : factors) {
    ExprList next;
    next.reserve(acc.size() * terms_of(a).size());
    for (const auto& x : acc)
      for (const auto& t : terms_of(a)) next.push_back(x * t);
    acc = std::move(next);
  }
  return Expr::add(std::move(acc));
}

Expr expand(const Expr& e, std::size_t max_terms) {
  if (e.args().empty()) return e;
  ExprList args;
  args.reserve(e.args().size());
  for (const auto& a : e.args()) args.push_back(expand(a, max_terms));
  if (e.kind() == Kind::Mul) return distribute(args, max_terms);
  if (e.kind() == Kind::Pow && args[0].kind() == Kind::Add && args[1].is_rational() &&
      args[1].rational().is_integer() && args[1].rational().num() > 1 && args[1].rational().num() <= 8) {
    ExprList factors(static_cast<std::size_t>(args[1].rational().num()), args[0]);
    return distribute(factors, max_terms);
  }
  return rebuild(e, std::move(args));
}

}  // namespace

Expr simplify_basic(const Expr& e, std::size_t max_terms) { return expand(e, max_terms); }

}  // namespace ppsym
