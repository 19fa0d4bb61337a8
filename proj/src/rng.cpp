#include "riesz/rng.hpp"

#include <cmath>

namespace riesz {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ fnv1a(stream)) ^ index);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

double standard_normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

Point random_unit_vector(Rng& rng, std::size_t dim) {
  Point v(dim);
  double n2 = 0.0;
  do {
    for (auto& c : v) c = standard_normal(rng);
    n2 = squared_norm(v);
  } while (n2 < 1e-24);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : v) c *= inv;
  return v;
}

Point random_in_unit_ball(Rng& rng, std::size_t dim) {
  Point v = random_unit_vector(rng, dim);
  const double r = std::pow(uniform01(rng), 1.0 / static_cast<double>(dim));
  for (auto& c : v) c *= r;
  return v;
}

}  // namespace riesz
