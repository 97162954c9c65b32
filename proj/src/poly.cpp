#include "goppa/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace goppa {

namespace {

Poly p_sqr(const Field& f, const Poly& a) {
  if (a.is_zero()) return {};
  std::vector<Elem> c(2 * a.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[2 * i] = f.sqr(a[i]);
  return Poly(std::move(c));
}

Poly sqr_mod(const Field& f, const Poly& a, const Poly& g) { return p_mod(f, p_sqr(f, a), g); }

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Poly Poly::monomial(Elem c, std::size_t d) {
  std::vector<Elem> v(d + 1, 0);
  v[d] = c;
  return Poly(std::move(v));
}

Poly p_add(const Poly& a, const Poly& b) {
  const auto& big = a.coeffs().size() >= b.coeffs().size() ? a : b;
  const auto& small = &big == &a ? b : a;
  std::vector<Elem> c = big.coeffs();
  for (std::size_t i = 0; i < small.coeffs().size(); ++i) c[i] ^= small[i];
  return Poly(std::move(c));
}

Poly p_scale(const Field& f, const Poly& a, Elem s) {
  std::vector<Elem> c = a.coeffs();
  for (auto& x : c) x = f.mul(x, s);
  return Poly(std::move(c));
}

Poly p_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] ^= f.mul(a[i], b[j]);
  }
  return Poly(std::move(c));
}

std::pair<Poly, Poly> p_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Elem> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Elem lead_inv = f.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Elem q = f.mul(c, lead_inv);
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] ^= f.mul(q, b[j]);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly p_mod(const Field& f, const Poly& a, const Poly& b) { return p_divmod(f, a, b).second; }

Poly p_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return p_scale(f, a, f.inv(a.lead()));
}

Poly p_gcd(const Field& f, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = p_mod(f, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return p_monic(f, x);
}

Elem p_eval(const Field& f, const Poly& p, Elem x) {
  Elem acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = f.mul(acc, x) ^ *it;
  return acc;
}

Poly formal_derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Elem> c(p.coeffs().size() - 1, 0);
  for (std::size_t i = 1; i < p.coeffs().size(); i += 2) c[i - 1] = p[i];
  return Poly(std::move(c));
}

Poly inv_mod(const Field& f, const Poly& a, const Poly& g) {
  // Invariant: r0 = s0*a (mod g), r1 = s1*a (mod g).
  Poly r0 = g, r1 = p_mod(f, a, g);
  Poly s0, s1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = p_divmod(f, r0, r1);
    Poly s = p_add(s0, p_mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial is not invertible modulo g");
  return p_mod(f, p_scale(f, s0, f.inv(r0.lead())), g);
}

Poly inv_linear_mod_g(const Field& f, Elem alpha, const Poly& g) {
  const int r = g.degree();
  if (r < 1) throw std::invalid_argument("Goppa polynomial must have degree >= 1");
  const Elem g_alpha = p_eval(f, g, alpha);
  if (g_alpha == 0) throw std::domain_error("g(alpha) = 0: (x - alpha) is not invertible modulo g");

  // Coefficient of x^i is sum_{k>i} g_k alpha^(k-1-i); accumulate from the top by Horner.
  std::vector<Elem> u(static_cast<std::size_t>(r), 0);
  Elem acc = 0;
  for (int i = r - 1; i >= 0; --i) {
    acc = f.mul(acc, alpha) ^ g[static_cast<std::size_t>(i + 1)];
    u[static_cast<std::size_t>(i)] = acc;
  }
  // Characteristic 2: the leading minus sign vanishes.
  return p_scale(f, Poly(std::move(u)), f.inv(g_alpha));
}

bool is_irreducible(const Field& f, const Poly& g) {
  const int r = g.degree();
  if (r < 1) return false;
  if (r == 1) return true;
  const Poly h = p_monic(f, g);
  const Poly x = Poly::monomial(1, 1);
  const unsigned m = f.degree();

  // frob[i] = x^(q^i) mod h, q = 2^m
  std::vector<Poly> frob{p_mod(f, x, h)};
  for (int i = 1; i <= r; ++i) {
    Poly y = frob.back();
    for (unsigned s = 0; s < m; ++s) y = sqr_mod(f, y, h);
    frob.push_back(std::move(y));
  }
  if (frob[static_cast<std::size_t>(r)] != p_mod(f, x, h)) return false;
  for (unsigned p : prime_factors(static_cast<unsigned>(r))) {
    const Poly d = p_add(frob[static_cast<std::size_t>(r) / p], x);
    if (!p_gcd(f, h, d).is_one()) return false;
  }
  return true;
}

bool is_square_free(const Field& f, const Poly& g) {
  if (g.degree() < 1) return false;
  return p_gcd(f, g, formal_derivative(g)).is_one();
}

Poly random_irreducible(const Field& f, unsigned r, Rng& rng) {
  if (r < 1) throw std::invalid_argument("irreducible polynomial degree must be >= 1");
  std::vector<Elem> c(r + 1);
  for (;;) {
    for (unsigned i = 0; i < r; ++i) c[i] = static_cast<Elem>(uniform_below(rng, f.size()));
    c[r] = 1;
    Poly g(c);
    if (is_irreducible(f, g)) return g;
  }
}

Poly random_irreducible(const Field& f, unsigned r, std::uint64_t seed) {
  Rng rng(seed);
  return random_irreducible(f, r, rng);
}

Poly sqrt_x_mod_g(const Field& f, const Poly& g) {
  if (!is_square_free(f, g)) throw std::invalid_argument("sqrt(x) mod g requires square-free g");
  // Squaring permutes F[x]/(g); the orbit of x under Frobenius closes, and the
  // element preceding x in that orbit is its square root.
  const Poly x = p_mod(f, Poly::monomial(1, 1), g);
  Poly prev = x;
  Poly cur = sqr_mod(f, x, g);
  while (cur != x) {
    prev = cur;
    cur = sqr_mod(f, cur, g);
  }
  return prev;
}

Poly poly_sqrt_mod_g(const Field& f, const Poly& p, const Poly& g, const Poly& sqrt_x) {
  const Poly a = p_mod(f, p, g);
  std::vector<Elem> even, odd;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    (i % 2 == 0 ? even : odd).push_back(f.sqrt(a[i]));
  const Poly s = p_mod(f, p_add(Poly(even), p_mul(f, sqrt_x, Poly(odd))), g);
  if (sqr_mod(f, s, g) != a) throw std::domain_error("no square root exists modulo g");
  return s;
}

Poly poly_sqrt_mod_g(const Field& f, const Poly& p, const Poly& g) {
  return poly_sqrt_mod_g(f, p, g, sqrt_x_mod_g(f, g));
}

std::string to_string(const Field& f, const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ' ';
    out += f.to_hex(p[i]);
  }
  return out;
}

Poly poly_from_string(const Field& f, std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<Elem> c;
  std::string tok;
  while (in >> tok) c.push_back(f.from_hex(tok));
  if (c.empty()) throw std::invalid_argument("empty polynomial");
  return Poly(std::move(c));
}

}  // namespace goppa
