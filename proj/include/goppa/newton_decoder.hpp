#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "goppa/bits.hpp"
#include "goppa/code.hpp"
#include "goppa/gf2m.hpp"
#include "goppa/poly.hpp"

namespace goppa {

/// Work performed by a decode. Squarings count as multiplications.
struct OpCounter {
  std::uint64_t field_mults = 0;
  std::uint64_t field_invs = 0;
  std::uint64_t row_ops = 0;

  std::uint64_t total() const { return field_mults + field_invs + row_ops; }
  bool operator==(const OpCounter&) const = default;
};

/// Field arithmetic that records every multiplication and inversion it performs.
class CountingArith {
 public:
  CountingArith(const Field& f, OpCounter& ops) : f_(f), ops_(ops) {}
  const Field& field() const { return f_; }
  OpCounter& ops() { return ops_; }

  Elem mul(Elem a, Elem b) {
    ++ops_.field_mults;
    return f_.mul(a, b);
  }
  Elem inv(Elem a) {
    ++ops_.field_invs;
    return f_.inv(a);
  }
  void row_op() { ++ops_.row_ops; }

 private:
  const Field& f_;
  OpCounter& ops_;
};

/// Which locator decides the error positions of each component.
enum class LocateMode { q, sigma, both };

/// adaptive skips work that the data makes unnecessary; fixed performs the same
/// operations for every received word of a given code.
enum class Profile { adaptive, fixed };

/// S_j = sum_i e_i alpha_i^j / G(alpha_i), j = 0.., against the code's decoding polynomial G.
/// A full period has 2^m - 1 entries; S_{j + 2^m - 1} = S_j.
struct SyndromeSequence {
  std::vector<Elem> values;
};

/// Per-basis-element split of a full-period syndrome sequence:
/// S_j = sum_l components[l][j] * alpha^l, where components[l] is the power-sum
/// sequence of the positions whose weighted error value has coordinate l set.
struct ComponentSyndromes {
  std::vector<std::vector<Elem>> components;
};

/// sigma(x) = prod (x - x_j) = x^k + sigma_1 x^(k-1) + ... + sigma_k.
struct ErrorLocator {
  Poly sigma;
  std::size_t k = 0;
};

/// Diagnostics for one basis component.
struct ComponentTrace {
  std::size_t k = 0;
  Poly sigma;
  /// Full-period power sums of the component (from the split).
  std::vector<Elem> extended;
  /// Q(x) built from the extended sequence.
  Poly q;
  BitVec located;
};

struct DecodeResult {
  BitVec error;
  BitVec codeword;
  BitVec message;
  OpCounter ops;
  /// Locator of the full weighted syndrome sequence.
  ErrorLocator locator;
  std::vector<ComponentTrace> per_component;
};

/// Syndromes of a received word against the decoding polynomial (2r values when g is square-free).
SyndromeSequence syndromes(const GoppaCode& code, const BitVec& received);

/// k = rank of the t x t Hankel matrix [S_{i+j}] and the monic degree-k sigma solving
/// sum_{j=1}^k sigma_j S_{i-j} = S_i for i = k..2k-1.
/// Requires at least 2t values. Throws DecodeFailure when the Newton recurrence
/// does not hold over the given prefix (weight above t).
ErrorLocator solve_sigma(CountingArith& arith, std::span<const Elem> seq, std::size_t t,
                         Profile profile = Profile::adaptive);
ErrorLocator solve_sigma(const Field& f, std::span<const Elem> seq, std::size_t t);

/// Extends a prefix to the full period 2^m - 1 by S_i = sum_j sigma_j S_{i-j}.
/// Under Profile::fixed the recurrence is evaluated at order `order` (>= k) with zero padding.
std::vector<Elem> extend_syndromes(CountingArith& arith, const ErrorLocator& locator,
                                   std::span<const Elem> prefix, Profile profile = Profile::adaptive,
                                   std::size_t order = 0);
std::vector<Elem> extend_syndromes(const Field& f, const ErrorLocator& locator, std::span<const Elem> prefix);

/// Splits a full-period sequence into m component power-sum sequences via the
/// trace: T^l_j = sum_s theta_l^(2^s) S_{j 2^-s}^(2^s), theta the dual basis.
/// Throws std::invalid_argument unless the input has length 2^m - 1.
ComponentSyndromes split_components(CountingArith& arith, std::span<const Elem> extended);
ComponentSyndromes split_components(const Field& f, std::span<const Elem> extended);
/// sum_l components[l][j] * alpha^l.
std::vector<Elem> recombine_components(const Field& f, const ComponentSyndromes& comps);

/// Q(x) = S_{N-1} + S_{N-2} x + ... + S_0 x^(N-1), N = 2^m - 1.
Poly build_q(std::span<const Elem> extended, std::size_t period);

/// Bit i set iff Q(alpha_i) != 0. Q is evaluated at degree max(deg Q, degree).
BitVec locate_errors_q(CountingArith& arith, const Poly& q, std::span<const Elem> support,
                       std::size_t degree = 0);
BitVec locate_errors_q(const Field& f, const Poly& q, std::span<const Elem> support);
/// Bit i set iff sigma(alpha_i) = 0. Under Profile::fixed sigma is evaluated at degree `order`.
BitVec locate_errors_sigma(CountingArith& arith, const Poly& sigma, std::span<const Elem> support,
                           Profile profile = Profile::adaptive, std::size_t order = 0);
BitVec locate_errors_sigma(const Field& f, const Poly& sigma, std::span<const Elem> support);

/// Full decoder: syndromes, locator of the weighted sequence, extension to the full
/// period, component split, per-component solve / extend / Q-evaluation, recombination,
/// and final verification against H_bin. Throws DecodeFailure if no codeword within
/// distance t is found and ModeDisagreement if the q and sigma locators differ.
DecodeResult decode(const GoppaCode& code, const BitVec& received, LocateMode mode = LocateMode::q,
                    Profile profile = Profile::adaptive);

/// Exhaustive minimum-weight decoding; requires n <= 20 and t <= 3.
DecodeResult decode_bruteforce(const GoppaCode& code, const BitVec& received);

}  // namespace goppa
