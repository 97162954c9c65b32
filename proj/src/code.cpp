#include "goppa/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace goppa {

namespace {

FieldMatrix control_matrix(const Field& f, const std::vector<Elem>& support, const Poly& g,
                           std::vector<Elem>* weights_out) {
  const std::size_t rows = static_cast<std::size_t>(g.degree());
  FieldMatrix h = zero_matrix(rows, support.size());
  std::vector<Elem> weights(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    weights[i] = f.inv(p_eval(f, g, support[i]));
    Elem entry = weights[i];
    for (std::size_t j = 0; j < rows; ++j) {
      h[j][i] = entry;
      entry = f.mul(entry, support[i]);
    }
  }
  if (weights_out) *weights_out = std::move(weights);
  return h;
}

}  // namespace

GoppaCode GoppaCode::build(std::shared_ptr<const Field> field, std::vector<Elem> support, Poly g) {
  if (!field) throw std::invalid_argument("null field");
  const Field& f = *field;
  const std::size_t n = support.size();
  const int r = g.degree();

  std::unordered_set<Elem> seen;
  for (Elem a : support) {
    if (!f.contains(a)) throw std::invalid_argument("support element outside the field");
    if (a == 0) throw std::invalid_argument("support must not contain 0");
    if (!seen.insert(a).second) throw std::invalid_argument("support elements must be distinct");
  }
  for (Elem c : g.coeffs())
    if (!f.contains(c)) throw std::invalid_argument("Goppa polynomial coefficient outside the field");
  if (n == 0 || r < 1 || static_cast<std::size_t>(r) > n - 1)
    throw std::invalid_argument("Goppa polynomial degree must satisfy 1 <= r <= n-1");
  for (Elem a : support)
    if (p_eval(f, g, a) == 0)
      throw std::invalid_argument("g vanishes at support element " + f.to_hex(a));

  GoppaCode code;
  code.field_ = std::move(field);
  code.support_ = std::move(support);
  code.g_ = std::move(g);
  code.square_free_ = is_square_free(f, code.g_);
  code.decoding_poly_ = code.square_free_ ? p_mul(f, code.g_, code.g_) : code.g_;
  code.t_ = code.square_free_ ? static_cast<std::size_t>(r) : static_cast<std::size_t>(r) / 2;

  code.H_ = control_matrix(f, code.support_, code.g_, nullptr);
  code.H_dec_ = control_matrix(f, code.support_, code.decoding_poly_, &code.weights_);

  const std::size_t rows = code.H_dec_.size();
  const unsigned m = f.degree();
  code.H_bin_ = BitMatrix(m * rows, n);
  for (unsigned lambda = 0; lambda < m; ++lambda)
    for (std::size_t j = 0; j < rows; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if ((code.H_dec_[j][i] >> lambda) & 1u) code.H_bin_.set(lambda * rows + j, i);

  code.G_ = code.H_bin_.null_space();
  code.G_pivots_ = code.G_.rref();
  if (code.G_.rows() == 0) throw std::invalid_argument("degenerate code: dimension k = 0");
  return code;
}

GoppaCode random_code(std::shared_ptr<const Field> field, unsigned r, std::size_t n, Rng& rng) {
  const Field& f = *field;
  if (n < 2 || n > f.order())
    throw std::invalid_argument("support size n must be in [2, 2^m - 1]");
  if (r < 1 || r > n - 1) throw std::invalid_argument("degree r must satisfy 1 <= r <= n-1");

  Poly g;
  if (r == 1) {
    // x + c has the root c; with a full support only c = 0 is admissible.
    const Elem c = (n == f.order()) ? 0 : static_cast<Elem>(uniform_below(rng, f.size()));
    g = Poly({c, 1});
  } else {
    g = random_irreducible(f, r, rng);
  }

  std::vector<Elem> candidates;
  for (Elem a = 1; a < f.size(); ++a)
    if (p_eval(f, g, a) != 0) candidates.push_back(a);
  if (candidates.size() < n) throw std::invalid_argument("not enough support candidates");
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + uniform_below(rng, candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  candidates.resize(n);
  return GoppaCode::build(std::move(field), std::move(candidates), std::move(g));
}

BitVec random_error_vector(std::size_t n, std::size_t w, Rng& rng) {
  if (w > n) throw std::invalid_argument("error weight exceeds word length");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  BitVec e(n);
  for (std::size_t i = 0; i < w; ++i) {
    std::swap(idx[i], idx[i + uniform_below(rng, n - i)]);
    e.set(idx[i]);
  }
  return e;
}

BitVec encode(const GoppaCode& code, const BitVec& message) {
  if (message.size() != code.k())
    throw std::invalid_argument("message length " + std::to_string(message.size()) +
                                " does not match k = " + std::to_string(code.k()));
  return code.G().left_apply(message);
}

BitVec recover_message(const GoppaCode& code, const BitVec& codeword) {
  if (codeword.size() != code.n()) throw std::invalid_argument("codeword length mismatch");
  const auto& pivots = code.G_pivots();
  BitVec msg(code.k());
  for (std::size_t i = 0; i < pivots.size(); ++i) msg.set(i, codeword.get(pivots[i]));
  if (code.G().left_apply(msg) != codeword) throw std::invalid_argument("word is not a codeword");
  return msg;
}

BitVec binary_syndrome(const GoppaCode& code, const BitVec& word) {
  if (word.size() != code.n()) throw std::invalid_argument("word length mismatch");
  return code.H_bin().apply(word);
}

bool is_codeword(const GoppaCode& code, const BitVec& word) { return binary_syndrome(code, word).is_zero(); }

bool is_codeword(const GoppaCode& code, const BitVec& word, Membership method) {
  const Field& f = code.field();
  const std::size_t n = code.n();
  if (word.size() != n) throw std::invalid_argument("word length mismatch");

  switch (method) {
    case Membership::sum_fractions: {
      Poly acc;
      for (std::size_t i = 0; i < n; ++i)
        if (word[i]) acc = p_add(acc, inv_linear_mod_g(f, code.support()[i], code.g()));
      return acc.is_zero();
    }
    case Membership::control_matrix: {
      for (const auto& row : code.H()) {
        Elem s = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (word[i]) s ^= row[i];
        if (s != 0) return false;
      }
      return true;
    }
    case Membership::derivative: {
      Poly sigma = Poly::constant(1);
      for (std::size_t i = 0; i < n; ++i)
        if (word[i]) sigma = p_mul(f, sigma, Poly({code.support()[i], 1}));
      return p_mod(f, formal_derivative(sigma), code.g()).is_zero();
    }
  }
  throw std::invalid_argument("unknown membership method");
}

std::size_t min_distance_bruteforce(const GoppaCode& code) {
  const std::size_t k = code.k();
  if (k > 20) throw std::invalid_argument("min_distance_bruteforce requires k <= 20");
  // Gray-code walk: consecutive codewords differ by one generator row.
  BitVec word(code.n());
  std::size_t best = code.n() + 1;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    word ^= code.G().row(bit);
    best = std::min(best, word.weight());
  }
  return best;
}

}  // namespace goppa
