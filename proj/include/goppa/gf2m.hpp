#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace goppa {

/// Element of GF(2^m) in polynomial-basis encoding: bit i is the coordinate on alpha^i.
using Elem = std::uint32_t;

/// GF(2^m) for 2 <= m <= 16, with alpha = x required to be primitive.
///
/// Arithmetic is table driven (exp/log). The object is immutable after
/// construction and may be shared freely between threads.
class Field {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 16;

  /// Field with the built-in reduction polynomial for m.
  explicit Field(unsigned m);
  /// Field with an explicit reduction polynomial (bit i = coefficient of x^i).
  /// Throws std::invalid_argument if m is out of range, the polynomial is not of
  /// degree m, is reducible, or x is not primitive modulo it.
  Field(unsigned m, std::uint32_t reduction_poly);

  /// Built-in reduction polynomial for m, each with x primitive.
  static std::uint32_t default_poly(unsigned m);

  unsigned degree() const { return m_; }
  std::uint32_t reduction_poly() const { return poly_; }
  /// Number of elements, 2^m.
  std::uint32_t size() const { return size_; }
  /// Multiplicative order, 2^m - 1.
  std::uint32_t order() const { return order_; }
  Elem alpha() const { return 2; }

  bool contains(Elem a) const { return a < size_; }

  static Elem add(Elem a, Elem b) { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem sqr(Elem a) const { return mul(a, a); }
  /// Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^e for any integer e; negative exponents require a != 0. 0^0 = 1.
  Elem pow(Elem a, std::int64_t e) const;
  /// Unique square root, a^(2^(m-1)).
  Elem sqrt(Elem a) const;
  /// Absolute trace to F_2, returned as 0 or 1.
  Elem trace(Elem a) const;

  /// alpha^i for any integer i (taken modulo 2^m - 1).
  Elem exp(std::int64_t i) const;
  /// Discrete log base alpha; throws std::domain_error for 0.
  std::uint32_t log(Elem a) const;

  /// Length-order() table with exp_table()[i] = alpha^i.
  std::span<const Elem> exp_table() const { return {exp_.data(), order_}; }
  /// log_table()[a] = log(a) for a != 0; entry 0 is unused.
  std::span<const std::uint32_t> log_table() const { return log_; }

  /// Coordinates on the basis {1, alpha, ..., alpha^(m-1)}; bits[l] multiplies alpha^l.
  std::vector<std::uint8_t> coords(Elem a) const;
  /// Inverse of coords(). Throws std::invalid_argument on wrong length or non-binary entries.
  Elem recombine(std::span<const std::uint8_t> bits) const;

  /// Dual basis under the trace form: trace(dual_basis()[l] * alpha^j) = [l == j].
  std::span<const Elem> dual_basis() const { return dual_; }

  std::string to_hex(Elem a) const;
  Elem from_hex(std::string_view s) const;

  bool operator==(const Field& other) const { return m_ == other.m_ && poly_ == other.poly_; }

 private:
  void build_dual_basis();

  unsigned m_;
  std::uint32_t poly_;
  std::uint32_t size_;
  std::uint32_t order_;
  std::vector<Elem> exp_;  // length 2 * order() so mul needs no reduction
  std::vector<std::uint32_t> log_;
  std::vector<Elem> dual_;
};

}  // namespace goppa
