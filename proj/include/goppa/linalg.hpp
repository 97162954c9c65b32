#pragma once

#include <cstddef>
#include <vector>

#include "goppa/gf2m.hpp"

namespace goppa {

/// Dense row-major matrix over GF(2^m). Verification-scale only.
using FieldMatrix = std::vector<std::vector<Elem>>;

FieldMatrix identity_matrix(std::size_t n);
FieldMatrix zero_matrix(std::size_t rows, std::size_t cols);
FieldMatrix mat_mul(const Field& f, const FieldMatrix& a, const FieldMatrix& b);
std::vector<Elem> mat_vec(const Field& f, const FieldMatrix& a, const std::vector<Elem>& v);
/// Rank by Gaussian elimination.
std::size_t mat_rank(const Field& f, FieldMatrix a);

}  // namespace goppa
