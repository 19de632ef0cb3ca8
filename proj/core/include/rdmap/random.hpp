#pragma once

#include <cstdint>
#include <random>

#include "rdmap/group_ring.hpp"

namespace rdmap {

// Seeded generator with platform-independent derived draws. std::mt19937_64
// output is fixed by the standard; the distributions in <random> are not, so
// the conversions are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

// Random element supported on up to max_terms distinct points of
// ball(max_length), with real and imaginary parts uniform in [-1, 1].
GroupRingElement random_element(const GroupDescriptor& g, Rng& rng, Length max_length,
                                std::size_t max_terms);

}  // namespace rdmap
