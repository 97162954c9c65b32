#include "goppa/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "goppa/errors.hpp"
#include "goppa/newton_decoder.hpp"
#include "goppa/patterson.hpp"

namespace goppa {

BenchReport run_bench(const GoppaCode& code, const std::vector<std::size_t>& weights, std::size_t trials,
                      std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (weights.empty()) throw std::invalid_argument("no weights given");
  for (std::size_t w : weights)
    if (w > code.t()) throw std::invalid_argument("bench weight " + std::to_string(w) + " exceeds t = " + std::to_string(code.t()));

  Rng rng(seed);
  BenchReport report;
  for (std::size_t w : weights) {
    BenchRow row;
    row.weight = w;
    row.trials = trials;
    row.newton_fixed_min = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t adaptive_sum = 0;
    std::vector<std::size_t> iters;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      BitVec msg(code.k());
      for (std::size_t i = 0; i < code.k(); ++i) msg.set(i, rng() & 1u);
      const BitVec e = random_error_vector(code.n(), w, rng);
      const BitVec received = encode(code, msg) ^ e;
      bool ok = true;
      try {
        const auto fixed = decode(code, received, LocateMode::q, Profile::fixed);
        row.newton_fixed = std::max(row.newton_fixed, fixed.ops.total());
        row.newton_fixed_min = std::min(row.newton_fixed_min, fixed.ops.total());
        const auto adaptive = decode(code, received, LocateMode::q, Profile::adaptive);
        adaptive_sum += adaptive.ops.total();
        ok = fixed.error == e && adaptive.error == e;
      } catch (const DecodeFailure&) {
        ok = false;
      }
      try {
        const auto patt = patterson_decode(code, received);
        iters.push_back(patt.trace.eea_iterations);
        ok = ok && patt.result.error == e;
      } catch (const DecodeFailure&) {
        ok = false;
      }
      row.failures += !ok;
    }
    if (row.newton_fixed_min == std::numeric_limits<std::uint64_t>::max()) row.newton_fixed_min = 0;
    row.newton_adaptive = static_cast<double>(adaptive_sum) / static_cast<double>(trials);
    if (!iters.empty()) {
      std::sort(iters.begin(), iters.end());
      row.patt_min = iters.front();
      row.patt_max = iters.back();
      row.patt_med = iters[(iters.size() - 1) / 2];
    }
    report.rows.push_back(row);
  }
  return report;
}

void write_csv(std::ostream& out, const BenchReport& report) {
  out << "weight,trials,newton_fixed,newton_adaptive,patt_min,patt_med,patt_max,failures\n";
  const auto flags = out.flags();
  for (const auto& r : report.rows)
    out << r.weight << ',' << r.trials << ',' << r.newton_fixed << ',' << std::fixed << std::setprecision(2)
        << r.newton_adaptive << ',' << r.patt_min << ',' << r.patt_med << ',' << r.patt_max << ',' << r.failures
        << '\n';
  out.flags(flags);
}

}  // namespace goppa
