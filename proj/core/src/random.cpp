#include "rdmap/random.hpp"

#include <stdexcept>

namespace rdmap {

GroupRingElement random_element(const GroupDescriptor& g, Rng& rng, Length max_length,
                                std::size_t max_terms) {
  if (max_terms == 0) throw std::invalid_argument("max_terms must be >= 1");
  const std::vector<GroupElement> pool = ball(g, max_length);
  const std::size_t terms = 1 + rng.below(std::min(max_terms, pool.size()));
  GroupRingElement f(g);
  while (f.support_size() < terms) {
    const auto& x = pool[rng.below(pool.size())];
    if (f.coefficient(x) != Complex{}) continue;
    f.set(x, Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
  }
  return f;
}

}  // namespace rdmap
