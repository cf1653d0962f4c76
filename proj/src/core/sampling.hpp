#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "evaluate.hpp"

namespace ppsym {

struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-9;

  /// |value| <= abs + rel * scale
  bool accepts(double value, double scale) const;
  /// value / (abs/rel + scale); compared against rel
  double scaled(double value, double scale) const;
};

using Point = std::map<std::string, double>;

struct Interval {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
};

/// Deterministic point generator over a box with exclusion predicates.
///
/// Points depend only on (seed, intervals, exclusions, count); the uniform mapping from the
/// 64-bit engine output is done here rather than through <random> distributions so the
/// sequence is identical across standard library implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 42, std::size_t count = 32) : seed_(seed), count_(count) {}

  Sampler& interval(const std::string& name, double lo, double hi);
  Sampler& exclude(std::function<bool(const Point&)> keep);
  /// Use one set of free-jet values for every point instead of fresh values per point.
  Sampler& share_jets(bool shared = true);
  bool shared_jets() const { return shared_jets_; }

  std::uint64_t seed() const { return seed_; }
  std::size_t count() const { return count_; }
  Sampler with_count(std::size_t count) const;
  Sampler with_seed(std::uint64_t seed) const;
  const std::vector<Interval>& intervals() const { return intervals_; }

  std::vector<Point> points() const;

  /// Value in [-1, 1] assigned to an uninstantiated jet at a given sample index.
  double jet_value(std::size_t point_index, const std::string& fn, const MultiIndex& index) const;

  /// Environment for sample i: base plus the point's coordinates plus a seeded jet source.
  Environment environment(const Environment& base, std::size_t point_index, const Point& p) const;

 private:
  std::uint64_t seed_;
  std::size_t count_;
  bool shared_jets_ = false;
  std::vector<Interval> intervals_;
  std::vector<std::function<bool(const Point&)>> keep_;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t hash_string(const std::string& s, std::uint64_t h = 1469598103934665603ULL);
/// Uniform double in [0, 1) from 53 high bits.
double unit_from_bits(std::uint64_t bits);

}  // namespace ppsym
