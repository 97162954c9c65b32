#include "goppa/mceliece.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "goppa/errors.hpp"
#include "goppa/io.hpp"
#include "goppa/random.hpp"

namespace goppa::mceliece {

namespace {

constexpr unsigned kMaxToyDegree = 8;

BitMatrix random_invertible(Rng& rng, std::size_t k) {
  for (;;) {
    BitMatrix s(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) s.set(i, j, rng() & 1u);
    if (s.rank() == k) return s;
  }
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
  return p;
}

}  // namespace

BitMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  BitMatrix p(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) p.set(perm[j], j);
  return p;
}

KeyPair assemble(GoppaCode code, BitMatrix S, std::vector<std::size_t> perm) {
  const std::size_t k = code.k(), n = code.n();
  if (S.rows() != k || S.cols() != k) throw std::invalid_argument("S must be k x k");
  if (perm.size() != n) throw std::invalid_argument("permutation must have length n");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("P is not a permutation");
    seen[p] = true;
  }
  const BitMatrix sg = S * code.G();
  BitMatrix g_pub(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) g_pub.set(i, j, sg.get(i, perm[j]));
  BitMatrix s_inv = S.inverse();
  const std::size_t t = code.t();
  return KeyPair{PublicKey{std::move(g_pub), t}, PrivateKey{std::move(code), std::move(S), std::move(s_inv), std::move(perm)}};
}

KeyPair keygen(unsigned m, unsigned r, std::size_t n, std::uint64_t seed) {
  if (m > kMaxToyDegree) throw std::invalid_argument("toy McEliece supports m <= 8");
  Rng rng(seed);
  GoppaCode code = random_code(std::make_shared<const Field>(m), r, n, rng);
  BitMatrix s = random_invertible(rng, code.k());
  auto perm = random_permutation(rng, code.n());
  return assemble(std::move(code), std::move(s), std::move(perm));
}

BitVec error_pattern(std::size_t n, std::size_t weight, std::uint64_t error_seed) {
  Rng rng(error_seed);
  return random_error_vector(n, weight, rng);
}

BitVec encrypt(const PublicKey& pub, const BitVec& msg, std::uint64_t error_seed) {
  return encrypt(pub, msg, error_seed, pub.t);
}

BitVec encrypt(const PublicKey& pub, const BitVec& msg, std::uint64_t error_seed, std::size_t weight) {
  if (msg.size() != pub.G.rows()) throw std::invalid_argument("message length does not match k");
  return pub.G.left_apply(msg) ^ error_pattern(pub.G.cols(), weight, error_seed);
}

Decryption decrypt(const KeyPair& keys, const BitVec& ciphertext, Profile profile) {
  const PrivateKey& priv = keys.priv;
  const std::size_t n = priv.code.n();
  if (ciphertext.size() != n) throw std::invalid_argument("ciphertext length does not match n");
  BitVec unpermuted(n);
  for (std::size_t j = 0; j < n; ++j) unpermuted.set(priv.perm[j], ciphertext[j]);

  const DecodeResult dec = decode(priv.code, unpermuted, LocateMode::q, profile);
  Decryption out;
  out.message = priv.S_inv.left_apply(dec.message);
  out.ops = dec.ops;
  out.error = ciphertext ^ keys.pub.G.left_apply(out.message);
  if (out.error.weight() > keys.pub.t) throw DecodeFailure("re-encryption check failed");
  return out;
}

void write_keys(std::ostream& out, const KeyPair& keys) {
  write_code(out, keys.priv.code);
  write_matrix_block(out, "S", keys.priv.S);
  write_matrix_block(out, "P", permutation_matrix(keys.priv.perm));
}

KeyPair read_keys(std::istream& in) {
  GoppaCode code = read_code(in);
  BitMatrix s = read_matrix_block(in, "S", code.k(), code.k());
  const BitMatrix p = read_matrix_block(in, "P", code.n(), code.n());
  std::vector<std::size_t> perm(code.n());
  for (std::size_t j = 0; j < code.n(); ++j) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < code.n(); ++i)
      if (p.get(i, j)) {
        perm[j] = i;
        ++ones;
      }
    if (ones != 1) throw ParseError("P is not a permutation matrix");
  }
  try {
    return assemble(std::move(code), std::move(s), std::move(perm));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace goppa::mceliece
