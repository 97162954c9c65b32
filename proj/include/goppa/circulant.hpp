#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "goppa/gf2m.hpp"
#include "goppa/linalg.hpp"
#include "goppa/newton_decoder.hpp"

namespace goppa {

/// Circulant matrix stored by its first row; row i is row i-1 shifted right by one,
/// so C[i][j] = first_row[(j - i) mod n].
struct Circulant {
  std::vector<Elem> first_row;

  std::size_t n() const { return first_row.size(); }
  Elem at(std::size_t i, std::size_t j) const { return first_row[(j + n() - i % n()) % n()]; }
  bool operator==(const Circulant&) const = default;
};

/// P[i][j] = alpha^(ij) and its inverse alpha^(-ij), both (2^m-1) x (2^m-1).
struct FourierPair {
  FieldMatrix P;
  FieldMatrix P_inv;
};

/// Largest size materialize() and fourier_pair() will build.
inline constexpr std::size_t kMaxMaterialize = 256;

/// The shift matrix A with first row (0, 1, 0, ..., 0); n = 1 gives the identity.
Circulant elementary_circulant(std::size_t n);

/// C v.
std::vector<Elem> circulant_apply(const Field& f, const Circulant& c, std::span<const Elem> v);

/// Coefficients (c_0..c_{n-1}) with C = sum c_i A^i.
std::vector<Elem> circulant_as_poly_in_A(const Circulant& c);

/// Dense copy, n <= kMaxMaterialize.
FieldMatrix materialize(const Circulant& c);

/// C(alpha^i) for i = 0..2^m-2, where C(x) = sum c_j x^j. Requires n = 2^m - 1.
std::vector<Elem> eigenvalues(const Field& f, const Circulant& c);

/// Number of nonzero eigenvalues. Requires n = 2^m - 1.
std::size_t rank_circulant(const Field& f, const Circulant& c);

FourierPair fourier_pair(const Field& f);

/// C_S with first row (S_{N-1}, S_{N-2}, ..., S_0); its characteristic polynomial C_S(x) is Q(x).
Circulant build_syndrome_circulant(const Field& f, std::span<const Elem> extended);

/// (0, ..., 0, 1, sigma_1, ..., sigma_k) of length n, which C_S annihilates.
std::vector<Elem> newton_kernel_vector(const ErrorLocator& locator, std::size_t n);

}  // namespace goppa
