#include <stdexcept>

#include "doctest.h"
#include "goppa/circulant.hpp"
#include "test_util.hpp"

using namespace goppa;
using goppa::testing::make_code;
using goppa::testing::random_bits;
using goppa::testing::random_error;

namespace {

Circulant random_circulant(const Field& f, Rng& rng, std::size_t n) {
  Circulant c{std::vector<Elem>(n)};
  for (auto& x : c.first_row) x = static_cast<Elem>(uniform_below(rng, f.size()));
  return c;
}

// Sparse-ish circulants exercise rank deficiency; dense random ones are almost always full rank.
Circulant deficient_circulant(const Field& f, Rng& rng) {
  // C(x) = product of (x - alpha^i) over a random subset, so the rank is n minus the subset size.
  Poly p = Poly::constant(1 + static_cast<Elem>(uniform_below(rng, f.order())));
  const std::size_t roots = uniform_below(rng, f.order() + 1);
  const BitVec pick = random_error(rng, f.order(), roots);
  for (std::size_t i = 0; i < f.order(); ++i)
    if (pick[i]) p = p_mul(f, p, Poly({f.exp(static_cast<std::uint32_t>(i)), 1}));
  // reduce mod x^n - 1 so it fits in a first row
  std::vector<Elem> row(f.order(), 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) row[i % f.order()] ^= p[i];
  return Circulant{row};
}

FieldMatrix mat_pow(const Field& f, const FieldMatrix& a, std::size_t k) {
  FieldMatrix out = identity_matrix(a.size());
  for (std::size_t i = 0; i < k; ++i) out = mat_mul(f, out, a);
  return out;
}

FieldMatrix unit_row(std::size_t n, std::size_t j) {
  FieldMatrix e(1, std::vector<Elem>(n, 0));
  e[0][j] = 1;
  return e;
}

}  // namespace

TEST_CASE("elementary circulant") {
  CHECK(materialize(elementary_circulant(1)) == identity_matrix(1));
  CHECK(materialize(elementary_circulant(2)) == FieldMatrix{{0, 1}, {1, 0}});
  CHECK(elementary_circulant(5).first_row == std::vector<Elem>{0, 1, 0, 0, 0});
  CHECK_THROWS_AS(elementary_circulant(0), std::invalid_argument);

  const Field f(4);
  for (std::size_t n = 1; n <= 15; ++n) {
    CAPTURE(n);
    const FieldMatrix a = materialize(elementary_circulant(n));
    CHECK(mat_pow(f, a, n) == identity_matrix(n));
    for (std::size_t k = 1; k < n; ++k) CHECK(mat_pow(f, a, k) != identity_matrix(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k <= n; ++k) CHECK(mat_mul(f, unit_row(n, j), mat_pow(f, a, k)) == unit_row(n, (j + k) % n));
  }
}

TEST_CASE("materialization rule and apply") {
  const Field f(3);
  Rng rng(1);
  const Circulant c = random_circulant(f, rng, 7);
  const auto m = materialize(c);
  CHECK(m[0] == c.first_row);
  for (std::size_t i = 1; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(m[i][j] == m[i - 1][(j + 6) % 7]);

  for (std::size_t j = 0; j < 7; ++j) {
    std::vector<Elem> e(7, 0);
    e[j] = 1;
    const auto col = circulant_apply(f, c, e);
    for (std::size_t i = 0; i < 7; ++i) CHECK(col[i] == m[i][j]);
  }
  Circulant id{std::vector<Elem>(7, 0)};
  id.first_row[0] = 1;
  const std::vector<Elem> v{1, 2, 3, 4, 5, 6, 7};
  CHECK(circulant_apply(f, id, v) == v);
  CHECK(circulant_apply(f, c, v) == mat_vec(f, m, v));
  CHECK_THROWS_AS(circulant_apply(f, c, std::vector<Elem>(6)), std::invalid_argument);
  CHECK_THROWS_AS(materialize(Circulant{std::vector<Elem>(kMaxMaterialize + 1)}), std::invalid_argument);
}

TEST_CASE("circulant is a polynomial in the shift") {
  Rng rng(2);
  for (unsigned m : {3u, 4u}) {
    const Field f(m);
    const std::size_t n = f.order();
    const FieldMatrix a = materialize(elementary_circulant(n));
    for (int trial = 0; trial < 50; ++trial) {
      const Circulant c = random_circulant(f, rng, n);
      const auto coeffs = circulant_as_poly_in_A(c);
      FieldMatrix sum = zero_matrix(n, n);
      FieldMatrix power = identity_matrix(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t s = 0; s < n; ++s) sum[r][s] ^= f.mul(coeffs[i], power[r][s]);
        power = mat_mul(f, power, a);
      }
      CHECK(sum == materialize(c));
    }
  }
}

TEST_CASE("Fourier pair") {
  for (unsigned m : {2u, 3u, 4u}) {
    const Field f(m);
    const auto fp = fourier_pair(f);
    CHECK(mat_mul(f, fp.P, fp.P_inv) == identity_matrix(f.order()));
    CHECK(mat_mul(f, fp.P_inv, fp.P) == identity_matrix(f.order()));
  }
  // 1 + alpha + ... + alpha^(2^m - 2) = 0
  const Field f(4);
  Elem s = 0;
  for (std::uint32_t i = 0; i < f.order(); ++i) s ^= f.exp(i);
  CHECK(s == 0);
}

TEST_CASE("eigenvalues and diagonalization") {
  const Field f(3);
  CHECK(eigenvalues(f, Circulant{std::vector<Elem>(7, 0)}) == std::vector<Elem>(7, 0));
  const auto ea = eigenvalues(f, elementary_circulant(7));
  for (std::uint32_t i = 0; i < 7; ++i) CHECK(ea[i] == f.exp(i));
  CHECK_THROWS_AS(eigenvalues(f, elementary_circulant(6)), std::invalid_argument);

  Rng rng(3);
  const auto fp = fourier_pair(f);
  for (int trial = 0; trial < 20; ++trial) {
    const Circulant c = random_circulant(f, rng, 7);
    const auto ev = eigenvalues(f, c);
    // eigencolumns
    for (std::size_t i = 0; i < 7; ++i) {
      std::vector<Elem> p(7);
      for (std::size_t r = 0; r < 7; ++r) p[r] = fp.P[r][i];
      const auto cp = circulant_apply(f, c, p);
      for (std::size_t r = 0; r < 7; ++r) CHECK(cp[r] == f.mul(ev[i], p[r]));
    }
    FieldMatrix d = zero_matrix(7, 7);
    for (std::size_t i = 0; i < 7; ++i) d[i][i] = ev[i];
    CHECK(mat_mul(f, mat_mul(f, fp.P, d), fp.P_inv) == materialize(c));
  }
}

TEST_CASE("spectral rank equals elimination rank") {
  Rng rng(4);
  for (unsigned m : {3u, 4u}) {
    const Field f(m);
    const std::size_t n = f.order();
    Circulant id{std::vector<Elem>(n, 0)};
    id.first_row[0] = 1;
    CHECK(rank_circulant(f, id) == n);
    CHECK(rank_circulant(f, Circulant{std::vector<Elem>(n, 0)}) == 0);
    for (int trial = 0; trial < 50; ++trial) {
      const Circulant c = trial % 2 ? random_circulant(f, rng, n) : deficient_circulant(f, rng);
      CHECK(rank_circulant(f, c) == mat_rank(f, materialize(c)));
    }
  }
}

TEST_CASE("syndrome circulant against decoding instances") {
  const Field f(4);
  CHECK(rank_circulant(f, build_syndrome_circulant(f, std::vector<Elem>(15, 0))) == 0);
  CHECK_THROWS_AS(build_syndrome_circulant(f, std::vector<Elem>(14, 0)), std::invalid_argument);

  // weight one at beta gives S_j = beta^j
  const Elem beta = f.exp(6);
  std::vector<Elem> s(15);
  for (std::size_t j = 0; j < 15; ++j) s[j] = f.pow(beta, static_cast<std::int64_t>(j));
  const Circulant c1 = build_syndrome_circulant(f, s);
  CHECK(rank_circulant(f, c1) == 1);
  CHECK(mat_rank(f, materialize(c1)) == 1);

  const GoppaCode code = make_code(4, 2, 15, 17);
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const BitVec e = random_error(rng, code.n(), trial % (code.t() + 1));
    const auto res = decode(code, encode(code, random_bits(rng, code.k())) ^ e, LocateMode::both);
    REQUIRE(res.error == e);
    for (const auto& comp : res.per_component) {
      const Circulant cs = build_syndrome_circulant(f, comp.extended);
      CHECK(rank_circulant(f, cs) == comp.k);
      CHECK(mat_rank(f, materialize(cs)) == comp.k);
      const auto v = newton_kernel_vector(ErrorLocator{comp.sigma, comp.k}, 15);
      CHECK(circulant_apply(f, cs, v) == std::vector<Elem>(15, 0));
      CHECK(Poly(cs.first_row) == comp.q);
    }
  }
}
