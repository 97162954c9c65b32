#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "goppa/code.hpp"

namespace goppa {

struct BenchRow {
  std::size_t weight = 0;
  std::size_t trials = 0;
  /// Fixed-profile total per decode; min and max coincide when the contract holds.
  std::uint64_t newton_fixed = 0;
  std::uint64_t newton_fixed_min = 0;
  double newton_adaptive = 0;  // mean total
  std::size_t patt_min = 0;
  std::size_t patt_med = 0;  // lower median of EEA iterations
  std::size_t patt_max = 0;
  /// Trials where either decoder failed to return the injected error.
  std::size_t failures = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

/// For each weight, decodes `trials` random codewords corrupted by random weight-w errors with
/// the fixed and adaptive Newton profiles and with Patterson. Weights must not exceed t.
BenchReport run_bench(const GoppaCode& code, const std::vector<std::size_t>& weights, std::size_t trials,
                      std::uint64_t seed);

/// Header `weight,trials,newton_fixed,newton_adaptive,patt_min,patt_med,patt_max,failures`.
void write_csv(std::ostream& out, const BenchReport& report);

}  // namespace goppa
