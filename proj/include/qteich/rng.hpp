#pragma once

#include <cstdint>
#include <random>

namespace qteich {

// Seeded RNG with portable derived values (the standard distributions are
// implementation-defined, which would break byte-identical reports).
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    double x = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * x;
  }

  std::uint64_t below(std::uint64_t n) { return gen() % n; }
};

}  // namespace qteich
