#include "evaluate.hpp"

#include <cmath>
#include <vector>

namespace ppsym {

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Environment& env) : env_(env) {}

  ScaledValue run(const Expr& e) { return eval(e); }

 private:
  const Environment& env_;
  // formal-argument values of the instantiation body currently being evaluated
  const std::vector<double>* frame_ = nullptr;
  std::map<JetKey, Expr> body_cache_;

  static ScaledValue leaf(double v) { return {v, std::fabs(v)}; }

  static double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw EvalError(EvalError::Reason::NonFinite, std::string("non-finite value in ") + what);
    return v;
  }

  double symbol(const std::string& name) const {
    if (frame_ && name.size() > 1 && name[0] == 'x') {
      int slot = 0;
      bool digits = true;
      for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') {
          digits = false;
          break;
        }
        slot = slot * 10 + (name[i] - '0');
      }
      if (digits && slot >= 1 && static_cast<std::size_t>(slot) <= frame_->size())
        return (*frame_)[static_cast<std::size_t>(slot - 1)];
    }
    if (auto it = env_.coordinates.find(name); it != env_.coordinates.end()) return it->second;
    if (auto it = env_.parameters.find(name); it != env_.parameters.end()) return it->second;
    throw EvalError(EvalError::Reason::Unresolved, "unresolved symbol '" + name + "'");
  }

  ScaledValue function(const Expr& e) {
    auto inst = env_.functions.find(e.name());
    if (inst == env_.functions.end()) {
      JetKey key{e.name(), e.index()};
      if (auto it = env_.jets.find(key); it != env_.jets.end()) return leaf(it->second);
      if (env_.jet_source) return leaf(env_.jet_source(e.name(), e.index()));
      throw EvalError(EvalError::Reason::Unresolved, "no value for function '" + e.name() + "'");
    }
    if (inst->second.arity != e.arity())
      throw EvalError(EvalError::Reason::Unresolved, "instantiation arity mismatch for '" + e.name() + "'");
    std::vector<double> vals;
    vals.reserve(e.args().size());
    for (const auto& a : e.args()) vals.push_back(eval(a).value);
    JetKey key{e.name(), e.index()};
    auto cached = body_cache_.find(key);
    if (cached == body_cache_.end()) {
      std::vector<std::string> formals;
      for (int k = 0; k < e.arity(); ++k) formals.push_back(formal_arg(k));
      cached = body_cache_.emplace(key, differentiate(inst->second.body, formals, e.index())).first;
    }
    const auto* saved = frame_;
    frame_ = &vals;
    ScaledValue out = eval(cached->second);
    frame_ = saved;
    return {out.value, std::fabs(out.value)};
  }

  ScaledValue builtin(const Expr& e) {
    double x = eval(e.args()[0]).value;
    double r = 0;
    switch (e.builtin_fn()) {
      case BuiltinFn::Sin: r = std::sin(x); break;
      case BuiltinFn::Cos: r = std::cos(x); break;
      case BuiltinFn::Tan: r = std::tan(x); break;
      case BuiltinFn::Exp: r = std::exp(x); break;
      case BuiltinFn::Ln:
        if (!(x > 0)) throw EvalError(EvalError::Reason::Domain, "ln of non-positive value " + std::to_string(x));
        r = std::log(x);
        break;
      case BuiltinFn::Sqrt:
        if (x < 0) throw EvalError(EvalError::Reason::Domain, "sqrt of negative value " + std::to_string(x));
        r = std::sqrt(x);
        break;
      case BuiltinFn::Arctan: r = std::atan(x); break;
      case BuiltinFn::Arctan2: {
        double xx = eval(e.args()[1]).value;
        if (x == 0 && xx == 0) throw EvalError(EvalError::Reason::Domain, "arctan2(0, 0)");
        r = std::atan2(x, xx);
        break;
      }
    }
    return leaf(checked(r, "builtin"));
  }

  ScaledValue power(const Expr& e) {
    ScaledValue b = eval(e.base());
    const Expr& ex = e.exponent();
    double p;
    bool const_exp = ex.is_number();
    p = const_exp ? ex.number_value() : eval(ex).value;
    bool integral = std::floor(p) == p;
    if (b.value < 0 && !integral)
      throw EvalError(EvalError::Reason::Domain, "negative base " + std::to_string(b.value) + " to fractional power");
    if (b.value == 0 && p < 0) throw EvalError(EvalError::Reason::Domain, "zero to a negative power");
    double v = checked(std::pow(b.value, p), "power");
    if (const_exp && p > 0) return {v, std::pow(b.scale, p)};
    return leaf(v);
  }

  ScaledValue eval(const Expr& e) {
    switch (e.kind()) {
      case Kind::Integer:
      case Kind::Rational:
      case Kind::Real:
        return leaf(e.number_value());
      case Kind::Symbol:
        return leaf(symbol(e.name()));
      case Kind::Add: {
        double sum = 0, scale = 0;
        for (const auto& t : e.args()) {
          ScaledValue s = eval(t);
          sum += s.value;
          scale = std::max(scale, s.scale);
        }
        return {checked(sum, "sum"), scale};
      }
      case Kind::Mul: {
        double prod = 1, scale = 1;
        for (const auto& f : e.args()) {
          ScaledValue s = eval(f);
          prod *= s.value;
          scale *= s.scale;
        }
        return {checked(prod, "product"), scale};
      }
      case Kind::Pow:
        return power(e);
      case Kind::Apply:
      case Kind::DerivApply:
        return function(e);
      case Kind::Builtin:
        return builtin(e);
    }
    return {};
  }
};

}  // namespace

ScaledValue evaluate_scaled(const Expr& e, const Environment& env) { return Evaluator(env).run(e); }

double evaluate(const Expr& e, const Environment& env) { return evaluate_scaled(e, env).value; }

}  // namespace ppsym
