#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "core/calculus.hpp"
#include "core/evaluate.hpp"

namespace testgen {

// Random expression trees over u, v, y, z that stay finite on [-2, 2]^4.
class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next(std::uint64_t n) { return rng_() % n; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  ppsym::Expr leaf() {
    static const char* vars[] = {"u", "v", "y", "z"};
    if (next(3) == 0) return ppsym::num(static_cast<std::int64_t>(next(7)) - 3, 1 + static_cast<std::int64_t>(next(3)));
    return ppsym::sym(vars[next(4)]);
  }

  ppsym::Expr expr(int depth) {
    using namespace ppsym;
    if (depth <= 0) return leaf();
    switch (next(8)) {
      case 0: return expr(depth - 1) + expr(depth - 1);
      case 1: return expr(depth - 1) * expr(depth - 1);
      case 2: return expr(depth - 1) - expr(depth - 1);
      case 3: return pow(expr(depth - 1), num(static_cast<std::int64_t>(next(3)) + 2));
      case 4: return sin(expr(depth - 1));
      case 5: return exp(sin(expr(depth - 1)));
      case 6: return ln(num(2) + cos(expr(depth - 1)));
      default: return expr(depth - 1) / (num(2) + sin(expr(depth - 1)));
    }
  }

  ppsym::Environment point() {
    ppsym::Environment env;
    for (const char* v : {"u", "v", "y", "z"}) env.coordinates[v] = uniform(-2, 2);
    return env;
  }

 private:
  std::mt19937_64 rng_;
};

inline bool close(double a, double b, double rel = 1e-9, double abs = 1e-9) {
  return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace testgen
