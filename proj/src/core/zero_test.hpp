#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sampling.hpp"

namespace ppsym {

enum class ZeroVerdict { SymbolicZero, NumericZero, NonZero };

std::string_view verdict_name(ZeroVerdict v);

struct ZeroTest {
  ZeroVerdict verdict = ZeroVerdict::SymbolicZero;
  double max_residual = 0.0;  // largest scaled residual over the samples
  std::size_t samples = 0;
  std::optional<Point> witness;
  double witness_value = 0.0;
  std::size_t witness_component = 0;

  bool zero() const { return verdict != ZeroVerdict::NonZero; }
};

/// Evaluation failed at a sample point (domain error, unresolved symbol, overflow).
class NumericFailure : public std::runtime_error {
 public:
  NumericFailure(const std::string& what, Point point) : std::runtime_error(what), point_(std::move(point)) {}
  const Point& point() const { return point_; }

 private:
  Point point_;
};

/// Two-tier zero test: literal zero after simplify_basic, else every sample within tolerance.
ZeroTest is_zero(const Expr& e, const Sampler& sampler, const Tolerance& tol, const Environment& base = {});

/// Joint test of several expressions that must all vanish; the witness names the worst component.
ZeroTest all_zero(const std::vector<Expr>& es, const Sampler& sampler, const Tolerance& tol,
                  const Environment& base = {});

}  // namespace ppsym
