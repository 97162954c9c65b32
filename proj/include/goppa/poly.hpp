#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "goppa/gf2m.hpp"
#include "goppa/random.hpp"

namespace goppa {

/// Dense univariate polynomial over GF(2^m); coeffs()[i] is the coefficient of x^i.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Elem> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(Elem c) { return Poly({c}); }
  /// c * x^d
  static Poly monomial(Elem c, std::size_t d);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  /// Coefficient of x^i, zero beyond the degree.
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Elem>& coeffs() const { return c_; }

  bool operator==(const Poly&) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Poly p_add(const Poly& a, const Poly& b);
Poly p_scale(const Field& f, const Poly& a, Elem c);
Poly p_mul(const Field& f, const Poly& a, const Poly& b);
/// Quotient and remainder; throws std::domain_error if b is zero.
std::pair<Poly, Poly> p_divmod(const Field& f, const Poly& a, const Poly& b);
Poly p_mod(const Field& f, const Poly& a, const Poly& b);
/// Monic gcd; p_gcd(a, 0) = monic(a), p_gcd(0, 0) = 0.
Poly p_gcd(const Field& f, const Poly& a, const Poly& b);
Elem p_eval(const Field& f, const Poly& p, Elem x);
Poly p_monic(const Field& f, const Poly& a);

Poly formal_derivative(const Poly& p);

/// Inverse of a modulo g by the extended Euclidean algorithm; throws
/// std::domain_error if gcd(a, g) != 1.
Poly inv_mod(const Field& f, const Poly& a, const Poly& g);

/// 1/(x - alpha) mod g from the closed form -1/g(alpha) * sum_k g_k sum_{i<k} x^i alpha^(k-1-i).
/// Throws std::domain_error if g(alpha) = 0 and std::invalid_argument if deg g < 1.
Poly inv_linear_mod_g(const Field& f, Elem alpha, const Poly& g);

bool is_irreducible(const Field& f, const Poly& g);
bool is_square_free(const Field& f, const Poly& g);
/// Monic irreducible polynomial of exact degree r, drawn from rng.
Poly random_irreducible(const Field& f, unsigned r, Rng& rng);
Poly random_irreducible(const Field& f, unsigned r, std::uint64_t seed);

/// sqrt(x) modulo a square-free g; throws std::invalid_argument otherwise.
Poly sqrt_x_mod_g(const Field& f, const Poly& g);
/// s with s^2 = p (mod g), for square-free g.
Poly poly_sqrt_mod_g(const Field& f, const Poly& p, const Poly& g);
/// Same, reusing a precomputed sqrt_x_mod_g(f, g).
Poly poly_sqrt_mod_g(const Field& f, const Poly& p, const Poly& g, const Poly& sqrt_x);

/// Space-separated lowercase hex coefficients, lowest degree first; the zero polynomial is "0".
std::string to_string(const Field& f, const Poly& p);
Poly poly_from_string(const Field& f, std::string_view s);

}  // namespace goppa
