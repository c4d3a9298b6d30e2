#pragma once

#include <cstdint>

#include "fov/complex_matrix.hpp"

namespace fov {

/// splitmix64 generator; the integer stream is identical on every platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }  // [0, 1)

  double gaussian();
  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }
};

/// Pseudorandom unit vector with complex-Gaussian entries.
ComplexVector random_unit_vector(std::size_t n, SplitMix64& rng);

}  // namespace fov
