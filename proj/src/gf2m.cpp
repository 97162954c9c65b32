#include "goppa/gf2m.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <stdexcept>
#include <string>

namespace goppa {

namespace {

constexpr std::array<std::uint32_t, 17> kDefaultPolys = {
    0,        0,
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

int bin_degree(std::uint32_t p) { return p ? 31 - std::countl_zero(p) : -1; }

std::uint32_t bin_mod(std::uint32_t a, std::uint32_t b) {
  const int db = bin_degree(b);
  for (int da = bin_degree(a); da >= db; da = bin_degree(a)) a ^= b << (da - db);
  return a;
}

bool bin_irreducible(std::uint32_t p) {
  const int d = bin_degree(p);
  for (std::uint32_t q = 2; bin_degree(q) <= d / 2; ++q)
    if (bin_mod(p, q) == 0) return false;
  return true;
}

void check_degree(unsigned m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree)
    throw std::invalid_argument("extension degree m must be in [2, 16], got " + std::to_string(m));
}

}  // namespace

std::uint32_t Field::default_poly(unsigned m) {
  check_degree(m);
  return kDefaultPolys[m];
}

Field::Field(unsigned m) : Field(m, default_poly(m)) {}

Field::Field(unsigned m, std::uint32_t reduction_poly)
    : m_(m), poly_(reduction_poly), size_(0), order_(0) {
  check_degree(m);
  if (bin_degree(reduction_poly) != static_cast<int>(m))
    throw std::invalid_argument("reduction polynomial must have degree m");
  if (!bin_irreducible(reduction_poly))
    throw std::invalid_argument("reduction polynomial is reducible");

  size_ = 1u << m;
  order_ = size_ - 1;
  exp_.assign(2 * order_, 0);
  log_.assign(size_, 0);
  std::vector<bool> seen(size_, false);

  Elem x = 1;
  for (std::uint32_t i = 0; i < order_; ++i) {
    if (seen[x])
      throw std::invalid_argument("x is not primitive modulo the reduction polynomial (order " +
                                  std::to_string(i) + ")");
    seen[x] = true;
    exp_[i] = x;
    log_[x] = i;
    x <<= 1;
    if (x & size_) x ^= reduction_poly;
  }
  if (x != 1) throw std::invalid_argument("x is not primitive modulo the reduction polynomial");
  for (std::uint32_t i = order_; i < 2 * order_; ++i) exp_[i] = exp_[i - order_];

  build_dual_basis();
}

void Field::build_dual_basis() {
  // Trace-form Gram matrix M[l][j] = tr(alpha^(l+j)), inverted over F_2.
  const unsigned m = m_;
  std::vector<std::uint32_t> gram(m), inv(m);
  for (unsigned l = 0; l < m; ++l) {
    gram[l] = 0;
    for (unsigned j = 0; j < m; ++j)
      if (trace(exp(l + j))) gram[l] |= 1u << j;
    inv[l] = 1u << l;
  }
  for (unsigned c = 0; c < m; ++c) {
    unsigned p = c;
    while (p < m && !((gram[p] >> c) & 1u)) ++p;
    if (p == m) throw std::logic_error("trace form is degenerate");
    std::swap(gram[c], gram[p]);
    std::swap(inv[c], inv[p]);
    for (unsigned r = 0; r < m; ++r) {
      if (r != c && ((gram[r] >> c) & 1u)) {
        gram[r] ^= gram[c];
        inv[r] ^= inv[c];
      }
    }
  }
  // Gram is symmetric, so its inverse is too; row l gives the coordinates of the l-th dual element.
  dual_.assign(m, 0);
  for (unsigned l = 0; l < m; ++l) dual_[l] = inv[l];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inversion of zero in GF(2^m)");
  return exp_[(order_ - log_[a]) % order_];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("negative power of zero in GF(2^m)");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = order_;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

Elem Field::sqrt(Elem a) const {
  if (a == 0) return 0;
  // log(a) / 2 modulo an odd order
  const std::uint32_t l = log_[a];
  return exp_[(l % 2 == 0) ? l / 2 : (l + order_) / 2];
}

Elem Field::trace(Elem a) const {
  Elem t = 0;
  Elem x = a;
  for (unsigned i = 0; i < m_; ++i) {
    t ^= x;
    x = sqr(x);
  }
  return t;
}

Elem Field::exp(std::int64_t i) const {
  const std::int64_t n = order_;
  std::int64_t r = i % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0 || a >= size_) throw std::domain_error("log of zero or out-of-field value");
  return log_[a];
}

std::vector<std::uint8_t> Field::coords(Elem a) const {
  std::vector<std::uint8_t> bits(m_);
  for (unsigned l = 0; l < m_; ++l) bits[l] = static_cast<std::uint8_t>((a >> l) & 1u);
  return bits;
}

Elem Field::recombine(std::span<const std::uint8_t> bits) const {
  if (bits.size() != m_) throw std::invalid_argument("coordinate vector must have length m");
  Elem a = 0;
  for (unsigned l = 0; l < m_; ++l) {
    if (bits[l] > 1) throw std::invalid_argument("coordinates must be 0 or 1");
    a |= static_cast<Elem>(bits[l]) << l;
  }
  return a;
}

std::string Field::to_hex(Elem a) const {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, a, 16);
  return std::string(buf, end);
}

Elem Field::from_hex(std::string_view s) const {
  Elem v = 0;
  if (s.empty()) throw std::invalid_argument("empty field element");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed field element '" + std::string(s) + "'");
  if (v >= size_) throw std::invalid_argument("field element out of range: " + std::string(s));
  return v;
}

}  // namespace goppa
