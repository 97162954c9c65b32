#pragma once

#include <memory>
#include <vector>

#include "goppa/bits.hpp"
#include "goppa/code.hpp"
#include "goppa/gf2m.hpp"
#include "goppa/random.hpp"

namespace goppa::testing {

inline std::shared_ptr<const Field> field(unsigned m) { return std::make_shared<const Field>(m); }

inline BitVec random_bits(Rng& rng, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
  return v;
}

inline BitVec random_error(Rng& rng, std::size_t n, std::size_t w) { return random_error_vector(n, w, rng); }

inline GoppaCode make_code(unsigned m, unsigned r, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_code(field(m), r, n, rng);
}

// sum over positions i with v_i set of alpha_i^j, for j = 0..len-1
inline std::vector<Elem> power_sums(const Field& f, const std::vector<Elem>& weights,
                                    const std::vector<Elem>& support, std::size_t len) {
  std::vector<Elem> s(len, 0);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (weights[i] == 0) continue;
    for (std::size_t j = 0; j < len; ++j) s[j] ^= f.mul(weights[i], f.pow(support[i], static_cast<std::int64_t>(j)));
  }
  return s;
}

}  // namespace goppa::testing
