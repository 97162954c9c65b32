#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "goppa/code.hpp"
#include "goppa/newton_decoder.hpp"

namespace goppa {

struct PattersonTrace {
  std::size_t eea_iterations = 0;
  /// (deg remainder, deg b) after each division step; the remainder degree strictly decreases.
  std::vector<std::pair<int, int>> degrees;
};

struct PattersonResult {
  DecodeResult result;
  PattersonTrace trace;
};

/// Patterson decoding against the Goppa polynomial g (square-free), correcting up to r errors.
/// Throws std::invalid_argument if g is not square-free and DecodeFailure when no codeword
/// within distance t is found.
PattersonResult patterson_decode(const GoppaCode& code, const BitVec& received);

}  // namespace goppa
