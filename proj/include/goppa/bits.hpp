#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace goppa {

/// Packed binary vector over F_2.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  /// Parses an ASCII '0'/'1' string; index 0 is the leftmost character.
  static BitVec from_string(std::string_view s);
  std::string to_string() const;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  bool operator==(const BitVec& other) const = default;

  std::size_t weight() const;
  bool is_zero() const;
  /// Inner product over F_2.
  bool dot(const BitVec& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row-major binary matrix; each row is a BitVec of length cols().
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  BitVec& row(std::size_t i) { return rows_[i]; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  bool operator==(const BitMatrix& other) const = default;

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& rhs) const;
  /// Matrix-vector product M·vᵗ (v has length cols()).
  BitVec apply(const BitVec& v) const;
  /// Row-vector product v·M (v has length rows()).
  BitVec left_apply(const BitVec& v) const;

  /// Brings the matrix to reduced row-echelon form in place and drops zero rows.
  /// Returns the pivot column of each remaining row.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  /// Basis of {x : M·xᵗ = 0}, one basis vector per free column.
  BitMatrix null_space() const;

  /// Inverse of a square invertible matrix; throws std::invalid_argument if singular.
  BitMatrix inverse() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

}  // namespace goppa
