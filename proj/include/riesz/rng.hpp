#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "riesz/geometry.hpp"

namespace riesz {

using Rng = std::mt19937_64;

/// Derives an independent seed for a named substream (init, candidates,
/// quadrature, ...) of a run seed.
std::uint64_t substream_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0) {
  return Rng(substream_seed(seed, stream, index));
}

double uniform01(Rng& rng);
double standard_normal(Rng& rng);

/// Uniform direction on the unit sphere S^{dim-1}.
Point random_unit_vector(Rng& rng, std::size_t dim);

/// Uniform point in the unit ball of R^dim.
Point random_in_unit_ball(Rng& rng, std::size_t dim);

}  // namespace riesz
