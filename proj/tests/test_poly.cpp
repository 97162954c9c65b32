#include <stdexcept>

#include "doctest.h"
#include "goppa/gf2m.hpp"
#include "goppa/poly.hpp"
#include "goppa/random.hpp"

using namespace goppa;

namespace {

Poly random_poly(const Field& f, Rng& rng, std::size_t deg) {
  std::vector<Elem> c(deg + 1);
  for (auto& x : c) x = static_cast<Elem>(uniform_below(rng, f.size()));
  c.back() = 1 + static_cast<Elem>(uniform_below(rng, f.order()));
  return Poly(std::move(c));
}

bool has_root(const Field& f, const Poly& p) {
  for (Elem a = 0; a < f.size(); ++a)
    if (p_eval(f, p, a) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("basic arithmetic") {
  const Field f(4);
  Rng rng(1);
  CHECK(Poly{}.degree() == -1);
  CHECK(Poly({0, 0}).is_zero());
  CHECK(Poly::monomial(3, 4).degree() == 4);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = random_poly(f, rng, uniform_below(rng, 8));
    const Poly b = random_poly(f, rng, uniform_below(rng, 6));
    const Poly c = random_poly(f, rng, uniform_below(rng, 4));
    CHECK(p_add(a, a).is_zero());
    CHECK(p_mul(f, a, b) == p_mul(f, b, a));
    CHECK(p_mul(f, a, p_add(b, c)) == p_add(p_mul(f, a, b), p_mul(f, a, c)));
    CHECK(p_mul(f, a, b).degree() == a.degree() + b.degree());
    const auto [q, rem] = p_divmod(f, a, b);
    CHECK(p_add(p_mul(f, q, b), rem) == a);
    CHECK(rem.degree() < b.degree());
    const Elem x = static_cast<Elem>(uniform_below(rng, f.size()));
    CHECK(p_eval(f, p_mul(f, a, b), x) == f.mul(p_eval(f, a, x), p_eval(f, b, x)));
    const Poly g = p_gcd(f, a, b);
    CHECK(g.lead() == 1);
    CHECK(p_mod(f, a, g).is_zero());
    CHECK(p_mod(f, b, g).is_zero());
    // Leibniz rule
    CHECK(formal_derivative(p_mul(f, a, b)) ==
          p_add(p_mul(f, formal_derivative(a), b), p_mul(f, a, formal_derivative(b))));
    // derivatives in characteristic 2 are squares of odd parts: only even powers remain
    const auto d = formal_derivative(a);
    for (std::size_t i = 1; i < d.coeffs().size(); i += 2) CHECK(d[i] == 0);
  }
  CHECK_THROWS_AS(p_divmod(f, Poly({1, 1}), Poly{}), std::domain_error);
  CHECK(p_gcd(f, Poly{}, Poly{}).is_zero());
}

TEST_CASE("inverse of x - alpha agrees with extended Euclid") {
  Rng rng(2);
  for (unsigned m : {4u, 6u, 8u}) {
    const Field f(m);
    for (int trial = 0; trial < 100; ++trial) {
      const Poly g = random_irreducible(f, 2 + static_cast<unsigned>(uniform_below(rng, 5)), rng);
      const Elem a = static_cast<Elem>(uniform_below(rng, f.size()));
      const Poly closed = inv_linear_mod_g(f, a, g);
      CHECK(closed == inv_mod(f, Poly({a, 1}), g));
      CHECK(p_mod(f, p_mul(f, closed, Poly({a, 1})), g).is_one());
    }
  }
  const Field f(4);
  const Poly g = p_mul(f, Poly({3, 1}), Poly({5, 1}));
  CHECK_THROWS_AS(inv_linear_mod_g(f, 3, g), std::domain_error);
  CHECK_THROWS_AS(inv_linear_mod_g(f, 3, Poly::constant(1)), std::invalid_argument);
  CHECK_THROWS_AS(inv_mod(f, Poly({3, 1}), g), std::domain_error);
}

TEST_CASE("irreducibility") {
  const Field f4(2);
  const Elem a = f4.alpha();
  CHECK_FALSE(has_root(f4, Poly({a, 1, 1})));
  CHECK(is_irreducible(f4, Poly({a, 1, 1})));
  CHECK_FALSE(is_irreducible(f4, Poly({1, 1, 1})));  // x^2 + x + 1 splits over GF(4)
  CHECK(has_root(f4, Poly({1, 1, 1})));

  // degree 2 and 3 irreducibility is equivalent to having no root
  Rng rng(3);
  const Field f(4);
  for (int trial = 0; trial < 400; ++trial) {
    const Poly p = p_monic(f, random_poly(f, rng, 2 + trial % 2));
    CHECK(is_irreducible(f, p) == !has_root(f, p));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = random_irreducible(f, 4, rng);
    const Poly q = random_irreducible(f, 2, rng);
    CHECK(p.degree() == 4);
    CHECK(p.lead() == 1);
    CHECK(is_irreducible(f, p));
    CHECK_FALSE(is_irreducible(f, p_mul(f, p, q)));
  }
  CHECK(random_irreducible(f, 5, 42) == random_irreducible(f, 5, 42));
}

TEST_CASE("square-freeness") {
  const Field f(5);
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly p = random_irreducible(f, 3, rng);
    const Poly q = random_irreducible(f, 2, rng);
    CHECK(is_square_free(f, p));
    CHECK(is_square_free(f, p_mul(f, p, q)) == (p != q));
    CHECK_FALSE(is_square_free(f, p_mul(f, q, q)));
    CHECK_FALSE(is_square_free(f, p_mul(f, p, p_mul(f, q, q))));
  }
}

TEST_CASE("square roots modulo g") {
  Rng rng(5);
  for (unsigned m : {3u, 5u, 8u}) {
    const Field f(m);
    for (int trial = 0; trial < 40; ++trial) {
      Poly g = random_irreducible(f, 2 + trial % 5, rng);
      if (trial % 3 == 0) g = p_mul(f, g, random_irreducible(f, 1, rng));
      if (!is_square_free(f, g)) continue;
      const Poly sx = sqrt_x_mod_g(f, g);
      CHECK(p_mod(f, p_mul(f, sx, sx), g) == Poly({0, 1}));
      for (int inner = 0; inner < 10; ++inner) {
        const Poly p = p_mod(f, random_poly(f, rng, uniform_below(rng, 8)), g);
        const Poly s = poly_sqrt_mod_g(f, p, g, sx);
        CHECK(p_mod(f, p_mul(f, s, s), g) == p);
        CHECK(s.degree() < g.degree());
        CHECK(s == poly_sqrt_mod_g(f, p, g));
      }
    }
  }
  const Field f(4);
  const Poly q = Poly({3, 1});
  CHECK_THROWS_AS(sqrt_x_mod_g(f, p_mul(f, q, q)), std::invalid_argument);
}

TEST_CASE("string form") {
  const Field f(8);
  CHECK(to_string(f, Poly{}) == "0");
  const Poly p({0x1b, 0, 0xff, 1});
  CHECK(to_string(f, p) == "1b 0 ff 1");
  CHECK(poly_from_string(f, "1b 0 ff 1") == p);
  CHECK(poly_from_string(f, "0").is_zero());
  CHECK_THROWS_AS(poly_from_string(f, ""), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_string(f, "1 100"), std::invalid_argument);
}
