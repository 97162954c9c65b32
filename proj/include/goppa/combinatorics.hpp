#pragma once

#include <cstddef>
#include <vector>

namespace goppa {

/// Calls fn(indices) for every w-subset of {0..n-1} in lexicographic order.
/// Stops early and returns true as soon as fn returns true.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t w, Fn&& fn) {
  if (w > n) return false;
  std::vector<std::size_t> idx(w);
  for (std::size_t i = 0; i < w; ++i) idx[i] = i;
  for (;;) {
    if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == n - w + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace goppa
