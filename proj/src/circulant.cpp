#include "goppa/circulant.hpp"

#include <stdexcept>
#include <string>

namespace goppa {

namespace {

void require_period(const Field& f, std::size_t n) {
  if (n != f.order())
    throw std::invalid_argument("spectral operations need size 2^m - 1 = " + std::to_string(f.order()) +
                                ", got " + std::to_string(n));
}

}  // namespace

Circulant elementary_circulant(std::size_t n) {
  if (n == 0) throw std::invalid_argument("circulant size must be positive");
  Circulant a{std::vector<Elem>(n, 0)};
  a.first_row[1 % n] = 1;
  return a;
}

std::vector<Elem> circulant_apply(const Field& f, const Circulant& c, std::span<const Elem> v) {
  const std::size_t n = c.n();
  if (v.size() != n)
    throw std::invalid_argument("vector length " + std::to_string(v.size()) + " does not match circulant size " +
                                std::to_string(n));
  std::vector<Elem> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] ^= f.mul(c.first_row[(j + n - i) % n], v[j]);
  return out;
}

std::vector<Elem> circulant_as_poly_in_A(const Circulant& c) { return c.first_row; }

FieldMatrix materialize(const Circulant& c) {
  const std::size_t n = c.n();
  if (n > kMaxMaterialize) throw std::invalid_argument("circulant too large to materialize");
  FieldMatrix m(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = c.at(i, j);
  return m;
}

std::vector<Elem> eigenvalues(const Field& f, const Circulant& c) {
  require_period(f, c.n());
  const Poly cx(c.first_row);
  std::vector<Elem> out(c.n());
  for (std::size_t i = 0; i < c.n(); ++i) out[i] = p_eval(f, cx, f.exp(static_cast<std::uint32_t>(i)));
  return out;
}

std::size_t rank_circulant(const Field& f, const Circulant& c) {
  std::size_t rank = 0;
  for (Elem e : eigenvalues(f, c)) rank += e != 0;
  return rank;
}

FourierPair fourier_pair(const Field& f) {
  const std::size_t n = f.order();
  if (n > kMaxMaterialize) throw std::invalid_argument("Fourier matrix too large");
  FourierPair fp{FieldMatrix(n, std::vector<Elem>(n)), FieldMatrix(n, std::vector<Elem>(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = static_cast<std::uint32_t>((i * j) % n);
      fp.P[i][j] = f.exp(e);
      fp.P_inv[i][j] = f.exp(static_cast<std::uint32_t>((n - e) % n));
    }
  return fp;
}

Circulant build_syndrome_circulant(const Field& f, std::span<const Elem> extended) {
  require_period(f, extended.size());
  const std::size_t n = extended.size();
  Circulant c{std::vector<Elem>(n)};
  for (std::size_t j = 0; j < n; ++j) c.first_row[j] = extended[n - 1 - j];
  return c;
}

std::vector<Elem> newton_kernel_vector(const ErrorLocator& locator, std::size_t n) {
  const std::size_t k = locator.k;
  if (k + 1 > n) throw std::invalid_argument("locator degree too large for kernel vector");
  std::vector<Elem> v(n, 0);
  v[n - 1 - k] = 1;
  // sigma(x) = x^k + sigma_1 x^(k-1) + ... + sigma_k, so sigma_l is coefficient k - l
  for (std::size_t l = 1; l <= k; ++l) v[n - 1 - k + l] = locator.sigma[k - l];
  return v;
}

}  // namespace goppa
