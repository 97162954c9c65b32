#include "goppa/newton_decoder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "goppa/combinatorics.hpp"
#include "goppa/errors.hpp"

namespace goppa {

namespace {

bool all_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

// sigma_j of the locator, zero for j > k.
Elem sigma_coeff(const ErrorLocator& loc, std::size_t j) {
  return j <= loc.k ? loc.sigma[loc.k - j] : 0;
}

// Rank of the t x t Hankel matrix [S_{i+j}] by elimination with full pivoting.
std::size_t hankel_rank(CountingArith& ar, std::span<const Elem> seq, std::size_t t, Profile profile) {
  std::vector<std::vector<Elem>> a(t, std::vector<Elem>(t));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) a[i][j] = seq[i + j];

  std::size_t rank = 0;
  for (std::size_t s = 0; s < t; ++s) {
    std::size_t pr = t, pc = t;
    for (std::size_t i = s; i < t && pr == t; ++i)
      for (std::size_t j = s; j < t; ++j)
        if (a[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    const bool found = pr != t;
    if (!found && profile == Profile::adaptive) break;
    if (found) {
      std::swap(a[s], a[pr]);
      for (auto& row : a) std::swap(row[s], row[pc]);
      ++rank;
    }
    // With no pivot the trailing block is zero and the updates below are no-ops.
    const Elem pinv = ar.inv(found ? a[s][s] : 1);
    for (std::size_t i = s + 1; i < t; ++i) {
      if (profile == Profile::adaptive && a[i][s] == 0) continue;
      const Elem factor = ar.mul(a[i][s], pinv);
      for (std::size_t j = s + 1; j < t; ++j) a[i][j] ^= ar.mul(factor, a[s][j]);
      a[i][s] = 0;
      ar.row_op();
    }
  }
  return rank;
}

}  // namespace

SyndromeSequence syndromes(const GoppaCode& code, const BitVec& received) {
  if (received.size() != code.n())
    throw std::invalid_argument("received word has length " + std::to_string(received.size()) +
                                ", expected " + std::to_string(code.n()));
  const auto& h = code.H_decoding();
  SyndromeSequence s{std::vector<Elem>(h.size(), 0)};
  for (std::size_t j = 0; j < h.size(); ++j)
    for (std::size_t i = 0; i < code.n(); ++i)
      if (received[i]) s.values[j] ^= h[j][i];
  return s;
}

ErrorLocator solve_sigma(CountingArith& ar, std::span<const Elem> seq, std::size_t t, Profile profile) {
  if (seq.size() < 2 * t)
    throw std::invalid_argument("solve_sigma needs at least 2t syndromes");

  const std::size_t k = hankel_rank(ar, seq, t, profile);

  // Newton system: sum_{j=1}^k sigma_j S_{i+k-j} = S_{i+k}, i < k. The fixed
  // profile embeds it in a t x t system padded with an identity block.
  const std::size_t dim = profile == Profile::fixed ? t : k;
  std::vector<std::vector<Elem>> a(dim, std::vector<Elem>(dim + 1, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (i < k) {
      for (std::size_t j = 1; j <= k; ++j) a[i][j - 1] = seq[i + k - j];
      a[i][dim] = seq[i + k];
    } else {
      a[i][i] = 1;
    }
  }
  for (std::size_t s = 0; s < dim; ++s) {
    std::size_t p = s;
    while (p < dim && a[p][s] == 0) ++p;
    if (p == dim) throw DecodeFailure("Newton system is singular");
    std::swap(a[s], a[p]);
    const Elem pinv = ar.inv(a[s][s]);
    const std::size_t from = profile == Profile::fixed ? 0 : s;
    for (std::size_t j = from; j <= dim; ++j) a[s][j] = ar.mul(a[s][j], pinv);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == s) continue;
      const Elem factor = a[i][s];
      if (profile == Profile::adaptive && factor == 0) continue;
      for (std::size_t j = from; j <= dim; ++j) a[i][j] ^= ar.mul(factor, a[s][j]);
      ar.row_op();
    }
  }

  std::vector<Elem> coeffs(k + 1, 0);
  coeffs[k] = 1;
  for (std::size_t j = 1; j <= k; ++j) coeffs[k - j] = a[j - 1][dim];
  ErrorLocator loc{Poly(std::move(coeffs)), k};

  // The recurrence must hold over the whole known prefix.
  const std::size_t order = profile == Profile::fixed ? t : k;
  bool consistent = true;
  for (std::size_t i = order; i < seq.size(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 1; j <= order; ++j) acc ^= ar.mul(sigma_coeff(loc, j), seq[i - j]);
    consistent = consistent && acc == seq[i];
  }
  if (!consistent) throw DecodeFailure("syndromes are inconsistent with any locator of degree <= t");
  return loc;
}

ErrorLocator solve_sigma(const Field& f, std::span<const Elem> seq, std::size_t t) {
  OpCounter ops;
  CountingArith ar(f, ops);
  return solve_sigma(ar, seq, t, Profile::adaptive);
}

std::vector<Elem> extend_syndromes(CountingArith& ar, const ErrorLocator& loc, std::span<const Elem> prefix,
                                   Profile profile, std::size_t order) {
  const std::size_t period = ar.field().order();
  const std::size_t ord = profile == Profile::fixed ? std::max(order, loc.k) : loc.k;
  if (prefix.size() < ord) throw std::invalid_argument("prefix shorter than the recurrence order");
  if (prefix.size() > period) throw std::invalid_argument("prefix longer than the full period");

  std::vector<Elem> out(period, 0);
  std::copy(prefix.begin(), prefix.end(), out.begin());
  for (std::size_t i = prefix.size(); i < period; ++i) {
    Elem acc = 0;
    for (std::size_t j = 1; j <= ord; ++j) acc ^= ar.mul(sigma_coeff(loc, j), out[i - j]);
    out[i] = acc;
  }
  return out;
}

std::vector<Elem> extend_syndromes(const Field& f, const ErrorLocator& loc, std::span<const Elem> prefix) {
  OpCounter ops;
  CountingArith ar(f, ops);
  return extend_syndromes(ar, loc, prefix);
}

ComponentSyndromes split_components(CountingArith& ar, std::span<const Elem> extended) {
  const Field& f = ar.field();
  const std::size_t period = f.order();
  const unsigned m = f.degree();
  if (extended.size() != period)
    throw std::invalid_argument("component split needs the full period of 2^m - 1 syndromes");

  // frob[s][j] = S_{j * 2^-s}^(2^s); 2^-1 = 2^(m-1) modulo 2^m - 1.
  const std::uint64_t half = std::uint64_t{1} << (m - 1);
  std::vector<std::vector<Elem>> frob(m, std::vector<Elem>(period));
  std::copy(extended.begin(), extended.end(), frob[0].begin());
  for (unsigned s = 1; s < m; ++s)
    for (std::size_t j = 0; j < period; ++j) {
      const Elem prev = frob[s - 1][(j * half) % period];
      frob[s][j] = ar.mul(prev, prev);
    }

  ComponentSyndromes out;
  out.components.assign(m, std::vector<Elem>(period, 0));
  for (unsigned l = 0; l < m; ++l) {
    Elem theta = f.dual_basis()[l];
    for (unsigned s = 0; s < m; ++s) {
      for (std::size_t j = 0; j < period; ++j) out.components[l][j] ^= ar.mul(theta, frob[s][j]);
      theta = f.sqr(theta);
    }
  }
  return out;
}

ComponentSyndromes split_components(const Field& f, std::span<const Elem> extended) {
  OpCounter ops;
  CountingArith ar(f, ops);
  return split_components(ar, extended);
}

std::vector<Elem> recombine_components(const Field& f, const ComponentSyndromes& comps) {
  if (comps.components.size() != f.degree()) throw std::invalid_argument("expected m components");
  const std::size_t len = comps.components.empty() ? 0 : comps.components[0].size();
  std::vector<Elem> out(len, 0);
  for (unsigned l = 0; l < f.degree(); ++l)
    for (std::size_t j = 0; j < len; ++j) out[j] ^= f.mul(comps.components[l][j], f.exp(l));
  return out;
}

Poly build_q(std::span<const Elem> extended, std::size_t period) {
  if (extended.size() != period) throw std::invalid_argument("Q needs exactly one full period of syndromes");
  std::vector<Elem> c(period);
  for (std::size_t j = 0; j < period; ++j) c[j] = extended[period - 1 - j];
  return Poly(std::move(c));
}

namespace {

Elem horner(CountingArith& ar, const Poly& p, std::size_t degree, Elem x) {
  Elem acc = 0;
  for (std::size_t j = degree + 1; j-- > 0;) acc = ar.mul(acc, x) ^ p[j];
  return acc;
}

std::size_t eval_degree(const Poly& p, std::size_t at_least) {
  return std::max<std::size_t>(at_least, p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()));
}

}  // namespace

BitVec locate_errors_q(CountingArith& ar, const Poly& q, std::span<const Elem> support, std::size_t degree) {
  BitVec bits(support.size());
  if (q.is_zero() && degree == 0) return bits;
  const std::size_t d = eval_degree(q, degree);
  for (std::size_t i = 0; i < support.size(); ++i)
    if (horner(ar, q, d, support[i]) != 0) bits.set(i);
  return bits;
}

BitVec locate_errors_q(const Field& f, const Poly& q, std::span<const Elem> support) {
  OpCounter ops;
  CountingArith ar(f, ops);
  return locate_errors_q(ar, q, support);
}

BitVec locate_errors_sigma(CountingArith& ar, const Poly& sigma, std::span<const Elem> support, Profile profile,
                           std::size_t order) {
  BitVec bits(support.size());
  if (profile == Profile::adaptive && sigma.degree() <= 0) return bits;
  const std::size_t d = eval_degree(sigma, profile == Profile::fixed ? order : 0);
  for (std::size_t i = 0; i < support.size(); ++i)
    if (horner(ar, sigma, d, support[i]) == 0) bits.set(i);
  return bits;
}

BitVec locate_errors_sigma(const Field& f, const Poly& sigma, std::span<const Elem> support) {
  OpCounter ops;
  CountingArith ar(f, ops);
  return locate_errors_sigma(ar, sigma, support);
}

DecodeResult decode(const GoppaCode& code, const BitVec& received, LocateMode mode, Profile profile) {
  const Field& f = code.field();
  const std::size_t n = code.n();
  const std::size_t t = code.t();
  const std::size_t period = f.order();
  const unsigned m = f.degree();
  const bool fixed = profile == Profile::fixed;
  if (2 * t > period) throw std::invalid_argument("correction capacity exceeds half the field period");

  DecodeResult res;
  CountingArith ar(f, res.ops);
  const SyndromeSequence synd = syndromes(code, received);

  if (!fixed && all_zero(synd.values)) {
    res.error = BitVec(n);
    res.codeword = received;
    res.message = recover_message(code, received);
    res.locator = {Poly::constant(1), 0};
    res.per_component.assign(m, ComponentTrace{0, Poly::constant(1), std::vector<Elem>(period, 0), Poly{}, BitVec(n)});
    return res;
  }

  // Locator of the weighted sequence first, then the full period by the Newton recurrence.
  res.locator = solve_sigma(ar, synd.values, t, profile);
  const std::vector<Elem> extended = extend_syndromes(ar, res.locator, synd.values, profile, t);
  const ComponentSyndromes comps = split_components(ar, extended);

  std::vector<Elem> recombined(n, 0);
  for (unsigned l = 0; l < m; ++l) {
    const std::vector<Elem>& seq = comps.components[l];
    const std::span<const Elem> prefix(seq.data(), 2 * t);
    ComponentTrace tr;
    tr.extended = seq;
    const ErrorLocator loc = solve_sigma(ar, prefix, t, profile);
    tr.k = loc.k;
    tr.sigma = loc.sigma;

    BitVec by_q, by_sigma;
    if (mode != LocateMode::sigma) {
      const std::vector<Elem> ext = extend_syndromes(ar, loc, prefix, profile, t);
      if (ext != seq) throw DecodeFailure("component " + std::to_string(l) + " violates the Newton recurrence");
      tr.q = build_q(ext, period);
      by_q = locate_errors_q(ar, tr.q, code.support(), fixed ? period - 1 : 0);
    } else {
      tr.q = build_q(seq, period);
    }
    if (mode != LocateMode::q) by_sigma = locate_errors_sigma(ar, loc.sigma, code.support(), profile, t);
    if (mode == LocateMode::both && by_q != by_sigma)
      throw ModeDisagreement("Q and sigma locators disagree on component " + std::to_string(l));

    tr.located = mode == LocateMode::sigma ? std::move(by_sigma) : std::move(by_q);
    if (tr.located.weight() != loc.k)
      throw DecodeFailure("component " + std::to_string(l) + " locator does not split over the support");
    for (std::size_t i = 0; i < n; ++i)
      if (tr.located[i]) recombined[i] |= Elem{1} << l;
    res.per_component.push_back(std::move(tr));
  }

  // E_i = (e_i^1..e_i^m) is the coordinate vector of e_i / G(alpha_i).
  res.error = BitVec(n);
  bool values_match = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (recombined[i] == 0) continue;
    res.error.set(i);
    values_match = values_match && recombined[i] == code.column_weights()[i];
  }
  if (!values_match) throw DecodeFailure("recombined error values do not match the code");
  if (res.error.weight() > t || res.error.weight() != res.locator.k)
    throw DecodeFailure("error weight exceeds the correction capacity");
  res.codeword = received ^ res.error;
  if (!is_codeword(code, res.codeword)) throw DecodeFailure("corrected word is not a codeword");
  res.message = recover_message(code, res.codeword);
  return res;
}

DecodeResult decode_bruteforce(const GoppaCode& code, const BitVec& received) {
  const std::size_t n = code.n();
  const std::size_t t = code.t();
  if (n > 20 || t > 3) throw std::invalid_argument("decode_bruteforce requires n <= 20 and t <= 3");
  const BitVec target = binary_syndrome(code, received);
  const BitMatrix cols = code.H_bin().transpose();

  DecodeResult res;
  for (std::size_t w = 0; w <= t && res.error.empty(); ++w) {
    for_each_combination(n, w, [&](const std::vector<std::size_t>& idx) {
      BitVec s(cols.cols());
      for (auto i : idx) s ^= cols.row(i);
      if (s != target) return false;
      res.error = BitVec(n);
      for (auto i : idx) res.error.set(i);
      return true;
    });
  }
  if (res.error.empty()) throw DecodeFailure("no error pattern of weight <= t matches the syndrome");
  res.codeword = received ^ res.error;
  res.message = recover_message(code, res.codeword);
  res.locator.sigma = Poly::constant(1);
  for (std::size_t i = 0; i < n; ++i)
    if (res.error[i]) res.locator.sigma = p_mul(code.field(), res.locator.sigma, Poly({code.support()[i], 1}));
  res.locator.k = res.error.weight();
  return res;
}

}  // namespace goppa
