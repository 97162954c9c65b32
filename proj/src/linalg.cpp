#include "goppa/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace goppa {

FieldMatrix identity_matrix(std::size_t n) {
  FieldMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

FieldMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return FieldMatrix(rows, std::vector<Elem>(cols, 0));
}

FieldMatrix mat_mul(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  FieldMatrix out = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      const Elem x = a[i][k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] ^= f.mul(x, b[k][j]);
    }
  }
  return out;
}

std::vector<Elem> mat_vec(const Field& f, const FieldMatrix& a, const std::vector<Elem>& v) {
  std::vector<Elem> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] ^= f.mul(a[i][j], v[j]);
  }
  return out;
}

std::size_t mat_rank(const Field& f, FieldMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[rank], a[p]);
    const Elem inv = f.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Elem factor = f.mul(a[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[r][j] ^= f.mul(factor, a[rank][j]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace goppa
