#include "goppa/bits.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace goppa {

BitVec BitVec::from_string(std::string_view s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      v.set(i);
    else if (s[i] != '0')
      throw std::invalid_argument("bit string may only contain '0' and '1'");
  }
  return v;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVec length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::size_t BitVec::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool BitVec::dot(const BitVec& other) const {
  if (other.size_ != size_) throw std::invalid_argument("BitVec length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("BitMatrix shape mismatch");
  BitMatrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(r, k)) out.rows_[r] ^= rhs.rows_[k];
  return out;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("BitMatrix/vector shape mismatch");
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out.set(r, rows_[r].dot(v));
  return out;
}

BitVec BitMatrix::left_apply(const BitVec& v) const {
  if (v.size() != rows()) throw std::invalid_argument("BitMatrix/vector shape mismatch");
  BitVec out(cols_);
  for (std::size_t r = 0; r < rows(); ++r)
    if (v.get(r)) out ^= rows_[r];
  return out;
}

std::vector<std::size_t> BitMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows(); ++c) {
    std::size_t p = lead;
    while (p < rows() && !rows_[p].get(c)) ++p;
    if (p == rows()) continue;
    std::swap(rows_[lead], rows_[p]);
    for (std::size_t r = 0; r < rows(); ++r)
      if (r != lead && rows_[r].get(c)) rows_[r] ^= rows_[lead];
    pivots.push_back(c);
    ++lead;
  }
  rows_.resize(lead);
  return pivots;
}

std::size_t BitMatrix::rank() const {
  BitMatrix copy = *this;
  return copy.rref().size();
}

BitMatrix BitMatrix::null_space() const {
  BitMatrix reduced = *this;
  const auto pivots = reduced.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;

  BitMatrix basis(0, cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(cols_);
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (reduced.get(i, f)) v.set(pivots[i]);
    basis.rows_.push_back(std::move(v));
  }
  return basis;
}

BitMatrix BitMatrix::inverse() const {
  const std::size_t n = rows();
  if (n != cols_) throw std::invalid_argument("inverse of non-square matrix");
  BitMatrix a = *this;
  BitMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !a.get(p, c)) ++p;
    if (p == n) throw std::invalid_argument("matrix is singular");
    std::swap(a.rows_[c], a.rows_[p]);
    std::swap(inv.rows_[c], inv.rows_[p]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && a.get(r, c)) {
        a.rows_[r] ^= a.rows_[c];
        inv.rows_[r] ^= inv.rows_[c];
      }
    }
  }
  return inv;
}

}  // namespace goppa
