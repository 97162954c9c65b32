#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "goppa/bits.hpp"
#include "goppa/gf2m.hpp"
#include "goppa/linalg.hpp"
#include "goppa/poly.hpp"
#include "goppa/random.hpp"

namespace goppa {

/// The three equivalent characterisations of membership in Γ(L, g).
enum class Membership {
  sum_fractions,   // sum a_i (1/(x - alpha_i) mod g) = 0
  control_matrix,  // H a^t = 0 over GF(2^m)
  derivative,      // g divides d/dx prod (x - alpha_i)^a_i
};

/// Binary Goppa code Γ(L, g) with support L ⊆ GF(2^m) \ {0}.
///
/// When g is square-free the code equals Γ(L, g²); the binary parity-check
/// matrix and all decoding then use g², giving 2r syndromes and capacity t = r.
/// Otherwise g itself is used and t = floor(r/2).
class GoppaCode {
 public:
  /// Throws std::invalid_argument on duplicate or zero support entries, a root of g
  /// in the support, deg g outside [1, n-1], or a code of dimension 0.
  static GoppaCode build(std::shared_ptr<const Field> field, std::vector<Elem> support, Poly g);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const std::vector<Elem>& support() const { return support_; }
  const Poly& g() const { return g_; }
  bool square_free() const { return square_free_; }
  /// g² when square-free, else g.
  const Poly& decoding_poly() const { return decoding_poly_; }

  std::size_t n() const { return support_.size(); }
  std::size_t r() const { return static_cast<std::size_t>(g_.degree()); }
  std::size_t k() const { return G_.rows(); }
  std::size_t t() const { return t_; }

  /// r x n control matrix of Γ(L, g): H[j][i] = alpha_i^j / g(alpha_i).
  const FieldMatrix& H() const { return H_; }
  /// Control matrix of the decoding polynomial, deg(decoding_poly) x n.
  const FieldMatrix& H_decoding() const { return H_dec_; }
  /// 1 / decoding_poly(alpha_i) for each position.
  const std::vector<Elem>& column_weights() const { return weights_; }
  /// Binary expansion of H_decoding(); row lambda*deg + j holds bit lambda of row j.
  const BitMatrix& H_bin() const { return H_bin_; }
  /// Generator matrix in reduced row-echelon form.
  const BitMatrix& G() const { return G_; }
  const std::vector<std::size_t>& G_pivots() const { return G_pivots_; }

 private:
  GoppaCode() = default;

  std::shared_ptr<const Field> field_;
  std::vector<Elem> support_;
  Poly g_;
  bool square_free_ = false;
  Poly decoding_poly_;
  FieldMatrix H_;
  FieldMatrix H_dec_;
  std::vector<Elem> weights_;
  BitMatrix H_bin_;
  BitMatrix G_;
  std::vector<std::size_t> G_pivots_;
  std::size_t t_ = 0;
};

inline GoppaCode build_code(std::shared_ptr<const Field> field, std::vector<Elem> support, Poly g) {
  return GoppaCode::build(std::move(field), std::move(support), std::move(g));
}

/// Random code with irreducible g of degree r and a random n-subset of nonzero
/// non-roots of g as support. Throws std::invalid_argument on infeasible parameters.
GoppaCode random_code(std::shared_ptr<const Field> field, unsigned r, std::size_t n, Rng& rng);

/// Uniformly random word of length n and exact weight w (partial Fisher-Yates).
BitVec random_error_vector(std::size_t n, std::size_t w, Rng& rng);

/// message · G. Throws std::invalid_argument if message.size() != k.
BitVec encode(const GoppaCode& code, const BitVec& message);
/// Inverse of encode on codewords; throws std::invalid_argument if the word is not a codeword.
BitVec recover_message(const GoppaCode& code, const BitVec& codeword);

/// H_bin · aᵗ.
BitVec binary_syndrome(const GoppaCode& code, const BitVec& word);
bool is_codeword(const GoppaCode& code, const BitVec& word);
bool is_codeword(const GoppaCode& code, const BitVec& word, Membership method);

/// Exact minimum distance by enumerating all 2^k codewords; requires k <= 20.
std::size_t min_distance_bruteforce(const GoppaCode& code);

}  // namespace goppa
