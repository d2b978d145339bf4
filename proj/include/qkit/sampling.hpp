#pragma once

#include <cstddef>
#include <random>
#include <vector>

namespace qkit {

/// Visits index tuples of the given extents: all of them when the product
/// fits `budget`, otherwise `budget` tuples drawn from `rng`. The visitor
/// returns false to stop early.
template <class Visit>
void for_tuples(const std::vector<std::size_t>& extents, std::size_t budget, std::mt19937_64& rng,
                Visit&& visit) {
  std::size_t product = 1;
  for (std::size_t e : extents) {
    if (e == 0) return;
    product = (product > budget / e + 1) ? budget + 1 : product * e;
  }
  std::vector<std::size_t> idx(extents.size(), 0);
  if (product <= budget) {
    for (std::size_t k = 0; k < product; ++k) {
      std::size_t rest = k;
      for (std::size_t i = 0; i < extents.size(); ++i) {
        idx[i] = rest % extents[i];
        rest /= extents[i];
      }
      if (!visit(idx)) return;
    }
    return;
  }
  for (std::size_t k = 0; k < budget; ++k) {
    for (std::size_t i = 0; i < extents.size(); ++i) {
      idx[i] = std::uniform_int_distribution<std::size_t>(0, extents[i] - 1)(rng);
    }
    if (!visit(idx)) return;
  }
}

}  // namespace qkit
