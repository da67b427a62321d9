#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "iwahori/errors.hpp"

namespace iwahori::detail {

// Bucketed shortest-path search from the identity in a Cayley graph with
// nonnegative integer edge weights.  step(p, x) is the p-th generator applied
// to x on the left.  Layer k lists the elements of weight k in discovery order.
template <typename Elt, typename Hash, typename Step>
std::vector<std::vector<Elt>> weighted_layers(const Elt& identity, std::span<const int> weights,
                                              int max_weight, Step step) {
  if (max_weight < 0) throw InvalidArgument("negative weight bound");
  for (int w : weights) {
    if (w < 0) throw InvalidArgument("generator weights must be nonnegative");
  }
  std::unordered_map<Elt, int, Hash> dist;
  std::vector<std::vector<Elt>> buckets(static_cast<std::size_t>(max_weight) + 1);
  dist.emplace(identity, 0);
  buckets[0].push_back(identity);

  std::vector<std::vector<Elt>> layers(buckets.size());
  for (int k = 0; k <= max_weight; ++k) {
    auto& bucket = buckets[static_cast<std::size_t>(k)];
    for (std::size_t idx = 0; idx < bucket.size(); ++idx) {
      const Elt x = bucket[idx];
      if (dist.at(x) != k) continue;  // superseded by a lighter path
      layers[static_cast<std::size_t>(k)].push_back(x);
      for (std::size_t p = 0; p < weights.size(); ++p) {
        const int d = k + weights[p];
        if (d > max_weight) continue;
        Elt y = step(p, x);
        auto it = dist.find(y);
        if (it == dist.end()) {
          dist.emplace(y, d);
          buckets[static_cast<std::size_t>(d)].push_back(std::move(y));
        } else if (d < it->second) {
          it->second = d;
          buckets[static_cast<std::size_t>(d)].push_back(std::move(y));
        }
      }
    }
  }
  return layers;
}

}  // namespace iwahori::detail
