#include "sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ppsym {

bool Tolerance::accepts(double value, double scale) const { return std::fabs(value) <= abs + rel * scale; }

double Tolerance::scaled(double value, double scale) const { return std::fabs(value) / (abs / rel + scale); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_string(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

double unit_from_bits(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

Sampler& Sampler::interval(const std::string& name, double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("empty sampling interval for " + name);
  for (auto& iv : intervals_) {
    if (iv.name == name) {
      iv.lo = lo;
      iv.hi = hi;
      return *this;
    }
  }
  intervals_.push_back({name, lo, hi});
  return *this;
}

Sampler& Sampler::exclude(std::function<bool(const Point&)> keep) {
  keep_.push_back(std::move(keep));
  return *this;
}

Sampler& Sampler::share_jets(bool shared) {
  shared_jets_ = shared;
  return *this;
}

Sampler Sampler::with_count(std::size_t count) const {
  Sampler s = *this;
  s.count_ = count;
  return s;
}

Sampler Sampler::with_seed(std::uint64_t seed) const {
  Sampler s = *this;
  s.seed_ = seed;
  return s;
}

std::vector<Point> Sampler::points() const {
  std::mt19937_64 engine(seed_);
  std::vector<Point> out;
  out.reserve(count_);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 1000 * (count_ + 1);
  while (out.size() < count_) {
    if (++attempts > max_attempts) throw std::runtime_error("sampler exclusions reject the whole domain");
    Point p;
    for (const auto& iv : intervals_) p[iv.name] = iv.lo + (iv.hi - iv.lo) * unit_from_bits(engine());
    bool ok = true;
    for (const auto& keep : keep_) ok = ok && keep(p);
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

namespace {

double seeded_jet(std::uint64_t seed, std::size_t point_index, const std::string& fn, const MultiIndex& index) {
  std::uint64_t h = splitmix64(seed ^ 0x5bd1e995ULL);
  h = splitmix64(h ^ point_index);
  h = splitmix64(h ^ hash_string(fn));
  for (int k : index) h = splitmix64(h ^ static_cast<std::uint64_t>(k + 1));
  return 2.0 * unit_from_bits(h) - 1.0;
}

}  // namespace

double Sampler::jet_value(std::size_t point_index, const std::string& fn, const MultiIndex& index) const {
  return seeded_jet(seed_, point_index, fn, index);
}

Environment Sampler::environment(const Environment& base, std::size_t point_index, const Point& p) const {
  Environment env = base;
  for (const auto& [k, v] : p) env.coordinates[k] = v;
  if (!env.jet_source) {
    env.jet_source = [seed = seed_, point_index = shared_jets_ ? std::size_t{0} : point_index](const std::string& fn, const MultiIndex& idx) {
      return seeded_jet(seed, point_index, fn, idx);
    };
  }
  return env;
}

}  // namespace ppsym
