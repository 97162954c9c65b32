#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "goppa/gf2m.hpp"
#include "goppa/random.hpp"

using namespace goppa;

namespace {

// Carry-less multiply then reduce; independent of the log/exp tables.
Elem clmul_mod(Elem a, Elem b, unsigned m, std::uint32_t poly) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < m; ++i)
    if ((b >> i) & 1u) acc ^= std::uint64_t{a} << i;
  for (int d = 2 * static_cast<int>(m) - 2; d >= static_cast<int>(m); --d)
    if ((acc >> d) & 1u) acc ^= std::uint64_t{poly} << (d - static_cast<int>(m));
  return static_cast<Elem>(acc);
}

}  // namespace

TEST_CASE("exp table of GF(8) with x^3 + x + 1") {
  const Field f(3, 0b1011);
  const std::vector<Elem> expected{1, 2, 4, 3, 6, 7, 5};
  CHECK(std::vector<Elem>(f.exp_table().begin(), f.exp_table().end()) == expected);
}

TEST_CASE("exp table of GF(4)") {
  const Field f(2, 0b111);
  CHECK(std::vector<Elem>(f.exp_table().begin(), f.exp_table().end()) == std::vector<Elem>{1, 2, 3});
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(Field(4, 0b11111), std::invalid_argument);  // x has order 5
  CHECK_THROWS_AS(Field(4, 0b10101), std::invalid_argument);  // (x^2+x+1)^2
  CHECK_THROWS_AS(Field(1), std::invalid_argument);
  CHECK_THROWS_AS(Field(17), std::invalid_argument);
  CHECK_THROWS_AS(Field(3, 0b10011), std::invalid_argument);  // wrong degree
  try {
    Field(4, 0b11111);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("primitive") != std::string::npos);
  }
}

TEST_CASE("GF(8) arithmetic values") {
  const Field f(3, 0b1011);
  const Elem a = f.alpha();
  CHECK(f.mul(a, f.mul(a, a)) == 0b011);
  // exhaustive search for the inverse of alpha
  Elem found = 0;
  for (Elem b = 1; b < 8; ++b)
    if (f.mul(a, b) == 1) found = b;
  CHECK(found == 0b101);
  CHECK(f.inv(a) == found);
  CHECK(f.pow(a, 6) == found);
  CHECK(f.pow(a, -1) == found);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK(f.coords(0b011) == std::vector<std::uint8_t>{1, 1, 0});
}

TEST_CASE("built-in fields satisfy the table invariants") {
  for (unsigned m = Field::kMinDegree; m <= Field::kMaxDegree; ++m) {
    CAPTURE(m);
    const Field f(m);
    const auto exp = f.exp_table();
    REQUIRE(exp.size() == f.order());
    CHECK(exp[0] == 1);
    std::set<Elem> distinct(exp.begin(), exp.end());
    CHECK(distinct.size() == f.order());
    CHECK(distinct.count(0) == 0);
    for (std::uint32_t i = 0; i < f.order(); ++i) CHECK_EQ(f.log(exp[i]), i);
    CHECK(f.pow(f.alpha(), f.order()) == 1);
  }
}

TEST_CASE("multiplication agrees with carry-less reduction, all pairs up to m = 8") {
  for (unsigned m = 2; m <= 8; ++m) {
    const Field f(m);
    bool ok = true;
    for (Elem a = 0; a < f.size(); ++a)
      for (Elem b = 0; b < f.size(); ++b) ok = ok && f.mul(a, b) == clmul_mod(a, b, m, f.reduction_poly());
    CHECK_MESSAGE(ok, "m = " << m);
  }
}

TEST_CASE("field properties on sampled elements") {
  Rng rng(11);
  for (unsigned m : {4u, 9u, 13u, 16u}) {
    CAPTURE(m);
    const Field f(m);
    for (int trial = 0; trial < 500; ++trial) {
      const Elem a = static_cast<Elem>(uniform_below(rng, f.size()));
      const Elem b = static_cast<Elem>(uniform_below(rng, f.size()));
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.mul(1, a) == a);
      CHECK(f.mul(a, b) == clmul_mod(a, b, m, f.reduction_poly()));
      CHECK(f.sqr(f.add(a, b)) == f.add(f.sqr(a), f.sqr(b)));
      CHECK(f.sqr(f.sqrt(a)) == a);
      CHECK(f.trace(a) <= 1);
      CHECK(f.recombine(f.coords(a)) == a);
      if (a && b) {
        CHECK(f.log(f.mul(a, b)) == (f.log(a) + f.log(b)) % f.order());
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, f.order()) == 1);
      }
    }
  }
}

TEST_CASE("coords and recombine are inverse bijections") {
  const Field f(5);
  std::set<std::vector<std::uint8_t>> images;
  for (Elem a = 0; a < f.size(); ++a) {
    CHECK(f.recombine(f.coords(a)) == a);
    images.insert(f.coords(a));
  }
  CHECK(images.size() == f.size());
  CHECK(f.coords(0) == std::vector<std::uint8_t>(5, 0));
  const std::vector<std::uint8_t> bad{1, 2, 0, 0, 0};
  CHECK_THROWS_AS(f.recombine(bad), std::invalid_argument);
}

TEST_CASE("dual basis under the trace form") {
  for (unsigned m = 2; m <= 16; ++m) {
    const Field f(m);
    for (unsigned l = 0; l < m; ++l)
      for (unsigned j = 0; j < m; ++j) CHECK(f.trace(f.mul(f.dual_basis()[l], f.exp(j))) == (l == j ? 1u : 0u));
  }
}

TEST_CASE("hex serialization") {
  const Field f(8);
  CHECK(f.to_hex(0) == "0");
  CHECK(f.to_hex(0xab) == "ab");
  CHECK(f.from_hex("ab") == 0xab);
  CHECK(f.from_hex("00f") == 0xf);
  CHECK_THROWS_AS(f.from_hex("100"), std::invalid_argument);
  CHECK_THROWS_AS(f.from_hex("zz"), std::invalid_argument);
  CHECK_THROWS_AS(f.from_hex(""), std::invalid_argument);
}
