#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "calculus.hpp"
#include "expr.hpp"

namespace ppsym {

using JetKey = std::pair<std::string, MultiIndex>;

struct Environment {
  std::map<std::string, double> coordinates;
  std::map<std::string, double> parameters;
  Instantiation functions;
  std::map<JetKey, double> jets;
  /// Consulted for uninstantiated function values missing from `jets`.
  std::function<double(const std::string&, const MultiIndex&)> jet_source;
};

class EvalError : public std::runtime_error {
 public:
  enum class Reason { Domain, Unresolved, NonFinite };
  EvalError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Value together with the magnitude of its largest additive constituent, used for scaled residuals.
struct ScaledValue {
  double value = 0.0;
  double scale = 0.0;
};

double evaluate(const Expr& e, const Environment& env);
ScaledValue evaluate_scaled(const Expr& e, const Environment& env);

}  // namespace ppsym
