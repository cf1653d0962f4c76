#include "expr.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace ppsym {

class Node {
 public:
  Kind kind = Kind::Integer;
  Rational q;
  double real = 0.0;
  std::string name;
  int arity = 0;
  BuiltinFn fn = BuiltinFn::Sin;
  MultiIndex index;
  ExprList args;
  std::size_t hash = 0;

  static Expr make(Node n) {
    n.hash = n.compute_hash();
    return Expr(std::make_shared<const Node>(std::move(n)));
  }

 private:
  std::size_t compute_hash() const {
    std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    switch (kind) {
      case Kind::Integer:
      case Kind::Rational:
        mix(std::hash<std::int64_t>{}(q.num()));
        mix(std::hash<std::int64_t>{}(q.den()));
        break;
      case Kind::Real:
        mix(std::hash<std::uint64_t>{}(std::bit_cast<std::uint64_t>(real)));
        break;
      case Kind::Symbol:
        mix(std::hash<std::string>{}(name));
        break;
      case Kind::Apply:
      case Kind::DerivApply:
        mix(std::hash<std::string>{}(name));
        mix(static_cast<std::size_t>(arity));
        for (int i : index) mix(static_cast<std::size_t>(i));
        break;
      case Kind::Builtin:
        mix(static_cast<std::size_t>(fn));
        break;
      default:
        break;
    }
    for (const auto& a : args) mix(a.hash());
    return h;
  }
};

namespace {

const Expr& zero_expr() {
  static const Expr z = Expr::integer(0);
  return z;
}

int kind_rank(Kind k) {
  switch (k) {
    case Kind::Integer:
    case Kind::Rational:
    case Kind::Real:
      return 0;
    case Kind::Symbol:
      return 1;
    case Kind::Apply:
      return 2;
    case Kind::DerivApply:
      return 3;
    case Kind::Builtin:
      return 4;
    case Kind::Pow:
      return 5;
    case Kind::Mul:
      return 6;
    case Kind::Add:
      return 7;
  }
  return 8;
}

Expr fold_numbers(const Expr& a, const Expr& b, bool multiply) {
  if (a.is_rational() && b.is_rational()) {
    try {
      return Expr::number(multiply ? a.rational() * b.rational() : a.rational() + b.rational());
    } catch (const RationalOverflow&) {
    }
  }
  double x = a.number_value(), y = b.number_value();
  return Expr::real(multiply ? x * y : x + y);
}

// Exact integer k-th root if it exists.
std::optional<std::int64_t> exact_root(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = exact_root(-n, k);
    if (!r) return std::nullopt;
    return -*r;
  }
  if (n == 0 || n == 1) return n;
  auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(k))));
  for (std::int64_t c = std::max<std::int64_t>(0, guess - 1); c <= guess + 1; ++c) {
    try {
      if (Rational(c).pow(k) == Rational(n)) return c;
    } catch (const RationalOverflow&) {
    }
  }
  return std::nullopt;
}

std::optional<Expr> fold_numeric_pow(const Expr& b, const Expr& e) {
  if (b.is_rational() && e.is_rational()) {
    Rational base = b.rational(), ex = e.rational();
    if (base.is_zero()) {
      if (ex.is_negative()) throw std::domain_error("zero raised to a negative power");
      return Expr::integer(0);
    }
    if (ex.is_integer()) {
      if (std::llabs(ex.num()) > 64) return std::nullopt;
      try {
        return Expr::number(base.pow(ex.num()));
      } catch (const RationalOverflow&) {
        return std::nullopt;
      }
    }
    if (ex.den() <= 16) {
      auto rn = exact_root(base.num(), ex.den());
      auto rd = exact_root(base.den(), ex.den());
      if (rn && rd) {
        try {
          return Expr::number(Rational(*rn, *rd).pow(ex.num()));
        } catch (const RationalOverflow&) {
        }
      }
    }
    return std::nullopt;
  }
  double x = b.number_value(), y = e.number_value();
  double r = std::pow(x, y);
  if (!std::isfinite(r)) return std::nullopt;
  return Expr::real(r);
}

}  // namespace

// ---- builtin metadata ------------------------------------------------------

std::string_view builtin_name(BuiltinFn fn) {
  switch (fn) {
    case BuiltinFn::Sin: return "sin";
    case BuiltinFn::Cos: return "cos";
    case BuiltinFn::Tan: return "tan";
    case BuiltinFn::Exp: return "exp";
    case BuiltinFn::Ln: return "ln";
    case BuiltinFn::Sqrt: return "sqrt";
    case BuiltinFn::Arctan: return "arctan";
    case BuiltinFn::Arctan2: return "arctan2";
  }
  return "?";
}

std::optional<BuiltinFn> builtin_from_name(std::string_view name) {
  static const std::pair<std::string_view, BuiltinFn> table[] = {
      {"sin", BuiltinFn::Sin},  {"cos", BuiltinFn::Cos},       {"tan", BuiltinFn::Tan},
      {"exp", BuiltinFn::Exp},  {"ln", BuiltinFn::Ln},         {"sqrt", BuiltinFn::Sqrt},
      {"arctan", BuiltinFn::Arctan}, {"arctan2", BuiltinFn::Arctan2}};
  for (const auto& [n, f] : table)
    if (n == name) return f;
  return std::nullopt;
}

int builtin_arity(BuiltinFn fn) { return fn == BuiltinFn::Arctan2 ? 2 : 1; }

std::string formal_arg(int slot) { return "x" + std::to_string(slot + 1); }

// ---- accessors -------------------------------------------------------------

Expr::Expr() : node_(zero_expr().node_) {}

Kind Expr::kind() const { return node_->kind; }
bool Expr::is_number() const {
  return node_->kind == Kind::Integer || node_->kind == Kind::Rational || node_->kind == Kind::Real;
}
bool Expr::is_rational() const { return node_->kind == Kind::Integer || node_->kind == Kind::Rational; }
bool Expr::is_zero() const { return is_rational() && node_->q.is_zero(); }
bool Expr::is_one() const { return is_rational() && node_->q.is_one(); }
Rational Expr::rational() const {
  if (!is_rational()) throw std::logic_error("expression is not a rational constant");
  return node_->q;
}
double Expr::number_value() const {
  if (node_->kind == Kind::Real) return node_->real;
  if (is_rational()) return node_->q.to_double();
  throw std::logic_error("expression is not a numeric constant");
}
const std::string& Expr::name() const { return node_->name; }
int Expr::arity() const { return node_->arity; }
FunctionSymbol Expr::function() const { return FunctionSymbol{node_->name, node_->arity}; }
BuiltinFn Expr::builtin_fn() const { return node_->fn; }
const MultiIndex& Expr::index() const { return node_->index; }
const ExprList& Expr::args() const { return node_->args; }
const Expr& Expr::base() const { return node_->args.at(0); }
const Expr& Expr::exponent() const { return node_->args.at(1); }
std::size_t Expr::hash() const { return node_->hash; }


// ---- ordering and equality -------------------------------------------------

namespace {

template <class T>
int three_way(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

int compare_lists(const ExprList& a, const ExprList& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(a[i], b[i])) return c;
  return three_way(a.size(), b.size());
}

int compare_numbers(const Expr& a, const Expr& b) {
  if (a.is_rational() && b.is_rational()) return three_way(a.rational(), b.rational());
  if (int c = three_way(a.number_value(), b.number_value())) return c;
  return three_way(a.kind() == Kind::Real, b.kind() == Kind::Real);
}

}  // namespace

int compare(const Expr& a, const Expr& b) {
  if (&a == &b) return 0;
  bool pa = a.kind() == Kind::Pow, pb = b.kind() == Kind::Pow;
  // powers sort next to their base so that x, x^2, y, y^3 interleave naturally
  if (pa != pb) {
    if (pa) {
      int c = compare(a.base(), b);
      return c ? c : 1;
    }
    int c = compare(a, b.base());
    return c ? c : -1;
  }
  if (pa) {
    if (int c = compare(a.base(), b.base())) return c;
    return compare(a.exponent(), b.exponent());
  }
  if (int c = three_way(kind_rank(a.kind()), kind_rank(b.kind()))) return c;
  switch (a.kind()) {
    case Kind::Integer:
    case Kind::Rational:
    case Kind::Real:
      return compare_numbers(a, b);
    case Kind::Symbol:
      return three_way(a.name(), b.name());
    case Kind::Apply:
    case Kind::DerivApply:
      if (int c = three_way(a.name(), b.name())) return c;
      if (int c = three_way(a.arity(), b.arity())) return c;
      if (int c = three_way(a.index(), b.index())) return c;
      return compare_lists(a.args(), b.args());
    case Kind::Builtin:
      if (int c = three_way(static_cast<int>(a.builtin_fn()), static_cast<int>(b.builtin_fn()))) return c;
      return compare_lists(a.args(), b.args());
    default:
      return compare_lists(a.args(), b.args());
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

bool operator<(const Expr& a, const Expr& b) { return compare(a, b) < 0; }

// ---- canonical constructors ------------------------------------------------

Expr Expr::integer(std::int64_t n) {
  Node node;
  node.kind = Kind::Integer;
  node.q = Rational(n);
  return Node::make(std::move(node));
}

Expr Expr::number(const Rational& q) {
  Node node;
  node.kind = q.is_integer() ? Kind::Integer : Kind::Rational;
  node.q = q;
  return Node::make(std::move(node));
}

Expr Expr::real(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite real constant");
  if (x == 0.0) return integer(0);
  Node node;
  node.kind = Kind::Real;
  node.real = x;
  return Node::make(std::move(node));
}

Expr Expr::symbol(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  Node node;
  node.kind = Kind::Symbol;
  node.name = std::move(name);
  return Node::make(std::move(node));
}

namespace {

bool is_numeric_zero(const Expr& e) { return e.is_number() && e.number_value() == 0.0; }

Expr make_raw(Kind kind, ExprList args) {
  Node node;
  node.kind = kind;
  node.args = std::move(args);
  return Node::make(std::move(node));
}

// coefficient times an already-canonical non-numeric product
Expr make_term(const Expr& coef, const Expr& rest) {
  if (coef.is_one()) return rest;
  ExprList args{coef};
  if (rest.kind() == Kind::Mul) {
    args.insert(args.end(), rest.args().begin(), rest.args().end());
  } else {
    if (rest.kind() == Kind::Add) return Expr::mul({coef, rest});
    args.push_back(rest);
  }
  return make_raw(Kind::Mul, std::move(args));
}

bool is_exp(const Expr& e) { return e.kind() == Kind::Builtin && e.builtin_fn() == BuiltinFn::Exp; }

}  // namespace

std::pair<Expr, Expr> split_coefficient(const Expr& term) {
  if (term.is_number()) return {term, Expr::integer(1)};
  if (term.kind() == Kind::Mul && term.args().front().is_number()) {
    const auto& a = term.args();
    if (a.size() == 2) return {a[0], a[1]};
    return {a[0], make_raw(Kind::Mul, ExprList(a.begin() + 1, a.end()))};
  }
  return {Expr::integer(1), term};
}

Expr Expr::add(ExprList terms) {
  ExprList flat;
  flat.reserve(terms.size());
  for (auto& t : terms) {
    if (t.kind() == Kind::Add)
      flat.insert(flat.end(), t.args().begin(), t.args().end());
    else
      flat.push_back(std::move(t));
  }
  Expr constant = integer(0);
  std::vector<std::pair<Expr, Expr>> collected;  // (rest, coefficient)
  std::unordered_map<Expr, std::size_t, ExprHash> slot;
  for (const auto& t : flat) {
    if (t.is_number()) {
      constant = fold_numbers(constant, t, false);
      continue;
    }
    auto [c, rest] = split_coefficient(t);
    auto it = slot.find(rest);
    if (it == slot.end()) {
      slot.emplace(rest, collected.size());
      collected.emplace_back(rest, c);
    } else {
      auto& coef = collected[it->second].second;
      coef = fold_numbers(coef, c, false);
    }
  }
  std::vector<std::pair<Expr, Expr>> kept;
  for (auto& rc : collected)
    if (!is_numeric_zero(rc.second)) kept.push_back(std::move(rc));
  std::sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) {
    int c = compare(x.first, y.first);
    return c ? c < 0 : compare(x.second, y.second) < 0;
  });
  ExprList out;
  if (!is_numeric_zero(constant)) out.push_back(constant);
  for (const auto& [rest, coef] : kept) out.push_back(make_term(coef, rest));
  if (out.empty()) return integer(0);
  if (out.size() == 1) return out.front();
  return make_raw(Kind::Add, std::move(out));
}

Expr Expr::mul(ExprList factors) {
  ExprList flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (f.kind() == Kind::Mul)
      flat.insert(flat.end(), f.args().begin(), f.args().end());
    else
      flat.push_back(std::move(f));
  }
  Expr coef = integer(1);
  std::vector<std::pair<Expr, Expr>> powers;  // (base, exponent)
  std::unordered_map<Expr, std::size_t, ExprHash> slot;
  ExprList exp_args;
  for (const auto& f : flat) {
    if (f.is_number()) {
      coef = fold_numbers(coef, f, true);
      if (is_numeric_zero(coef)) return integer(0);
      continue;
    }
    if (is_exp(f)) {
      exp_args.push_back(f.args().front());
      continue;
    }
    Expr b = f.kind() == Kind::Pow ? f.base() : f;
    Expr e = f.kind() == Kind::Pow ? f.exponent() : integer(1);
    auto it = slot.find(b);
    if (it == slot.end()) {
      slot.emplace(b, powers.size());
      powers.emplace_back(b, e);
    } else {
      auto& ex = powers[it->second].second;
      ex = add({ex, e});
    }
  }
  ExprList rest;
  bool reprocess = false;
  auto absorb = [&](Expr p) {
    if (p.is_number()) {
      coef = fold_numbers(coef, p, true);
    } else {
      if (p.kind() == Kind::Mul || (is_exp(p) && !exp_args.empty())) reprocess = true;
      rest.push_back(std::move(p));
    }
  };
  for (auto& [b, e] : powers) absorb(pow(b, e));
  if (!exp_args.empty()) {
    if (exp_args.size() == 1)
      rest.push_back(builtin(BuiltinFn::Exp, {exp_args.front()}));
    else
      absorb(builtin(BuiltinFn::Exp, {add(exp_args)}));
  }
  if (is_numeric_zero(coef)) return integer(0);
  if (reprocess) {
    rest.push_back(coef);
    return mul(std::move(rest));
  }
  if (rest.empty()) return coef;
  std::sort(rest.begin(), rest.end(), [](const Expr& x, const Expr& y) { return compare(x, y) < 0; });
  if (rest.size() == 1) {
    if (coef.is_one()) return rest.front();
    if (rest.front().kind() == Kind::Add) {
      ExprList dist;
      dist.reserve(rest.front().args().size());
      for (const auto& t : rest.front().args()) dist.push_back(mul({coef, t}));
      return add(std::move(dist));
    }
  }
  if (!coef.is_one()) rest.insert(rest.begin(), coef);
  return make_raw(Kind::Mul, std::move(rest));
}

Expr Expr::pow(const Expr& b, const Expr& e) {
  if (e.is_zero()) return integer(1);
  if (e.is_one()) return b;
  if (b.is_one()) return integer(1);
  if (b.is_zero()) {
    if (e.is_number()) {
      if (e.number_value() < 0) throw std::domain_error("zero raised to a negative power");
      return integer(0);
    }
  }
  if (b.is_number() && e.is_number()) {
    if (auto folded = fold_numeric_pow(b, e)) return *folded;
    return make_raw(Kind::Pow, {b, e});
  }
  bool int_exp = e.is_rational() && e.rational().is_integer();
  if (b.kind() == Kind::Pow && int_exp) return pow(b.base(), mul({b.exponent(), e}));
  if (b.kind() == Kind::Mul) {
    if (int_exp) {
      ExprList parts;
      for (const auto& f : b.args()) parts.push_back(pow(f, e));
      return mul(std::move(parts));
    }
    const Expr& c = b.args().front();
    if (c.is_number() && c.number_value() > 0) {
      auto [coef, rest] = split_coefficient(b);
      return mul({pow(coef, e), pow(rest, e)});
    }
  }
  if (is_exp(b)) return builtin(BuiltinFn::Exp, {mul({b.args().front(), e})});
  return make_raw(Kind::Pow, {b, e});
}

Expr Expr::apply(const FunctionSymbol& fn, ExprList args) {
  if (fn.name.empty()) throw std::invalid_argument("empty function name");
  if (static_cast<int>(args.size()) != fn.arity)
    throw std::invalid_argument("function " + fn.name + " expects " + std::to_string(fn.arity) + " argument(s), got " +
                                std::to_string(args.size()));
  Node node;
  node.kind = Kind::Apply;
  node.name = fn.name;
  node.arity = fn.arity;
  node.index.assign(static_cast<std::size_t>(fn.arity), 0);
  node.args = std::move(args);
  return Node::make(std::move(node));
}

Expr Expr::deriv(const FunctionSymbol& fn, MultiIndex index, ExprList args) {
  if (static_cast<int>(index.size()) != fn.arity)
    throw std::invalid_argument("derivative index of " + fn.name + " must have " + std::to_string(fn.arity) +
                                " entries");
  bool any = false;
  for (int i : index) {
    if (i < 0) throw std::invalid_argument("negative derivative order");
    any = any || i > 0;
  }
  if (!any) return apply(fn, std::move(args));
  if (static_cast<int>(args.size()) != fn.arity)
    throw std::invalid_argument("function " + fn.name + " expects " + std::to_string(fn.arity) + " argument(s)");
  Node node;
  node.kind = Kind::DerivApply;
  node.name = fn.name;
  node.arity = fn.arity;
  node.index = std::move(index);
  node.args = std::move(args);
  return Node::make(std::move(node));
}

namespace {

// leading numeric coefficient of a term or of the first term of a sum
bool looks_negative(const Expr& e) {
  if (e.is_number()) return e.number_value() < 0;
  if (e.kind() == Kind::Add) return looks_negative(e.args().front().is_number() ? e.args()[1] : e.args().front());
  auto [c, rest] = split_coefficient(e);
  return c.number_value() < 0;
}

std::optional<double> eval_builtin(BuiltinFn fn, const ExprList& a) {
  double x = a[0].number_value();
  double r = 0;
  switch (fn) {
    case BuiltinFn::Sin: r = std::sin(x); break;
    case BuiltinFn::Cos: r = std::cos(x); break;
    case BuiltinFn::Tan: r = std::tan(x); break;
    case BuiltinFn::Exp: r = std::exp(x); break;
    case BuiltinFn::Ln:
      if (x <= 0) return std::nullopt;
      r = std::log(x);
      break;
    case BuiltinFn::Sqrt:
      if (x < 0) return std::nullopt;
      r = std::sqrt(x);
      break;
    case BuiltinFn::Arctan: r = std::atan(x); break;
    case BuiltinFn::Arctan2: r = std::atan2(x, a[1].number_value()); break;
  }
  if (!std::isfinite(r)) return std::nullopt;
  return r;
}

}  // namespace

Expr Expr::builtin(BuiltinFn fn, ExprList args) {
  if (static_cast<int>(args.size()) != builtin_arity(fn))
    throw std::invalid_argument(std::string(builtin_name(fn)) + " expects " + std::to_string(builtin_arity(fn)) +
                                " argument(s)");
  if (fn == BuiltinFn::Sqrt) return pow(args[0], number(Rational(1, 2)));
  const Expr& x = args[0];
  bool all_numeric = std::all_of(args.begin(), args.end(), [](const Expr& a) { return a.is_number(); });
  if (all_numeric) {
    bool exact = std::all_of(args.begin(), args.end(), [](const Expr& a) { return a.is_rational(); });
    if (exact) {
      if (fn != BuiltinFn::Arctan2 && fn != BuiltinFn::Ln && x.is_zero())
        return integer(fn == BuiltinFn::Cos || fn == BuiltinFn::Exp ? 1 : 0);
      if (fn == BuiltinFn::Ln && x.is_one()) return integer(0);
      if (fn == BuiltinFn::Arctan2 && x.is_zero() && args[1].number_value() > 0) return integer(0);
    } else if (auto v = eval_builtin(fn, args)) {
      return real(*v);
    }
  }
  if (fn == BuiltinFn::Ln && is_exp(x)) return x.args().front();
  if (fn == BuiltinFn::Exp && x.kind() == Kind::Builtin && x.builtin_fn() == BuiltinFn::Ln) return x.args().front();
  if ((fn == BuiltinFn::Sin || fn == BuiltinFn::Tan || fn == BuiltinFn::Arctan) && looks_negative(x))
    return mul({integer(-1), builtin(fn, {mul({integer(-1), x})})});
  if (fn == BuiltinFn::Cos && looks_negative(x)) return builtin(fn, {mul({integer(-1), x})});
  Node node;
  node.kind = Kind::Builtin;
  node.fn = fn;
  node.args = std::move(args);
  return Node::make(std::move(node));
}

// ---- operators and builders ------------------------------------------------

Expr Expr::operator-() const { return mul({integer(-1), *this}); }
Expr operator+(const Expr& a, const Expr& b) { return Expr::add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::add({a, Expr::mul({Expr::integer(-1), b})}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::mul({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::mul({a, Expr::pow(b, Expr::integer(-1))}); }

Expr num(std::int64_t n) { return Expr::integer(n); }
Expr num(std::int64_t n, std::int64_t d) { return Expr::number(Rational(n, d)); }
Expr sym(std::string name) { return Expr::symbol(std::move(name)); }
Expr pow(const Expr& b, const Expr& e) { return Expr::pow(b, e); }
Expr sqrt(const Expr& e) { return Expr::pow(e, num(1, 2)); }
Expr sin(const Expr& e) { return Expr::builtin(BuiltinFn::Sin, {e}); }
Expr cos(const Expr& e) { return Expr::builtin(BuiltinFn::Cos, {e}); }
Expr tan(const Expr& e) { return Expr::builtin(BuiltinFn::Tan, {e}); }
Expr exp(const Expr& e) { return Expr::builtin(BuiltinFn::Exp, {e}); }
Expr ln(const Expr& e) { return Expr::builtin(BuiltinFn::Ln, {e}); }
Expr arctan(const Expr& e) { return Expr::builtin(BuiltinFn::Arctan, {e}); }
Expr arctan2(const Expr& y, const Expr& x) { return Expr::builtin(BuiltinFn::Arctan2, {y, x}); }

// ---- structural queries ----------------------------------------------------

bool depends_on(const Expr& e, std::string_view symbol) {
  if (e.kind() == Kind::Symbol) return e.name() == symbol;
  for (const auto& a : e.args())
    if (depends_on(a, symbol)) return true;
  return false;
}

bool contains_function(const Expr& e, std::string_view fn_name) {
  if ((e.kind() == Kind::Apply || e.kind() == Kind::DerivApply) && e.name() == fn_name) return true;
  for (const auto& a : e.args())
    if (contains_function(a, fn_name)) return true;
  return false;
}

void collect_symbols(const Expr& e, std::vector<std::string>& out) {
  if (e.kind() == Kind::Symbol) {
    if (std::find(out.begin(), out.end(), e.name()) == out.end()) out.push_back(e.name());
    return;
  }
  for (const auto& a : e.args()) collect_symbols(a, out);
}

void collect_jets(const Expr& e, std::vector<std::pair<FunctionSymbol, MultiIndex>>& out) {
  if (e.kind() == Kind::Apply || e.kind() == Kind::DerivApply) {
    std::pair<FunctionSymbol, MultiIndex> jet{e.function(), e.index()};
    if (std::find(out.begin(), out.end(), jet) == out.end()) out.push_back(std::move(jet));
  }
  for (const auto& a : e.args()) collect_jets(a, out);
}

std::size_t node_count(const Expr& e) {
  std::size_t n = 1;
  for (const auto& a : e.args()) n += node_count(a);
  return n;
}

}  // namespace ppsym
