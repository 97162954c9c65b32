#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "goppa/bits.hpp"
#include "goppa/code.hpp"
#include "goppa/newton_decoder.hpp"

namespace goppa::mceliece {

struct PublicKey {
  /// G' = S G P.
  BitMatrix G;
  std::size_t t = 0;
};

struct PrivateKey {
  GoppaCode code;
  BitMatrix S;
  BitMatrix S_inv;
  /// Column j of G P is column perm[j] of G.
  std::vector<std::size_t> perm;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

struct Decryption {
  BitVec message;
  /// Error in ciphertext coordinates.
  BitVec error;
  OpCounter ops;
};

/// Toy parameters only (m <= 8). Deterministic per seed.
KeyPair keygen(unsigned m, unsigned r, std::size_t n, std::uint64_t seed);
/// Rebuilds the public half and S^-1 from (code, S, perm).
KeyPair assemble(GoppaCode code, BitMatrix S, std::vector<std::size_t> perm);

/// P as an n x n matrix with P[perm[j]][j] = 1.
BitMatrix permutation_matrix(const std::vector<std::size_t>& perm);

/// msg G' + e with a uniformly chosen error of the given weight (t when omitted).
BitVec encrypt(const PublicKey& pub, const BitVec& msg, std::uint64_t error_seed);
BitVec encrypt(const PublicKey& pub, const BitVec& msg, std::uint64_t error_seed, std::size_t weight);
/// The error pattern encrypt() would add for this seed and weight.
BitVec error_pattern(std::size_t n, std::size_t weight, std::uint64_t error_seed);

/// Un-permutes, decodes, unscrambles, and re-encrypts to check the result.
/// Throws DecodeFailure if the ciphertext is not within distance t of a codeword.
Decryption decrypt(const KeyPair& keys, const BitVec& ciphertext, Profile profile = Profile::fixed);

/// Code file followed by `S:` (k x k) and `P:` (n x n) blocks.
void write_keys(std::ostream& out, const KeyPair& keys);
/// Throws ParseError.
KeyPair read_keys(std::istream& in);

}  // namespace goppa::mceliece
