#include "goppa/patterson.hpp"

#include <stdexcept>

#include "goppa/errors.hpp"

namespace goppa {

namespace {

DecodeResult finish(const GoppaCode& code, const BitVec& received, BitVec error) {
  DecodeResult res;
  res.codeword = received ^ error;
  if (!is_codeword(code, res.codeword)) throw DecodeFailure("patterson: corrected word is not a codeword");
  res.message = recover_message(code, res.codeword);
  res.error = std::move(error);
  return res;
}

}  // namespace

PattersonResult patterson_decode(const GoppaCode& code, const BitVec& received) {
  const Field& f = code.field();
  const Poly& g = code.g();
  if (!code.square_free()) throw std::invalid_argument("patterson decoding needs a square-free Goppa polynomial");
  if (received.size() != code.n()) throw std::invalid_argument("received word length mismatch");

  PattersonResult out;
  Poly s;
  for (std::size_t i = 0; i < code.n(); ++i)
    if (received[i]) s = p_add(s, inv_linear_mod_g(f, code.support()[i], g));
  if (s.is_zero()) {
    out.result = finish(code, received, BitVec(code.n()));
    out.result.locator = ErrorLocator{Poly::constant(1), 0};
    return out;
  }

  Poly t_inv;
  try {
    t_inv = inv_mod(f, s, g);
  } catch (const std::domain_error&) {
    throw DecodeFailure("patterson: syndrome polynomial is not invertible");
  }
  const Poly tau = poly_sqrt_mod_g(f, p_add(t_inv, Poly({0, 1})), g);

  // Partial Euclid on (g, tau): keep b with b tau = a mod g until deg a <= floor(r/2).
  const int stop = g.degree() / 2;
  Poly r0 = g, r1 = tau;
  Poly b0, b1 = Poly::constant(1);
  while (r1.degree() > stop) {
    auto [q, rem] = p_divmod(f, r0, r1);
    Poly b2 = p_add(b0, p_mul(f, q, b1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    b0 = std::move(b1);
    b1 = std::move(b2);
    ++out.trace.eea_iterations;
    out.trace.degrees.emplace_back(r1.degree(), b1.degree());
  }

  const Poly sigma = p_add(p_mul(f, r1, r1), p_mul(f, Poly({0, 1}), p_mul(f, b1, b1)));
  if (sigma.is_zero() || static_cast<std::size_t>(sigma.degree()) > code.t())
    throw DecodeFailure("patterson: locator degree exceeds capacity");

  BitVec error(code.n());
  for (std::size_t i = 0; i < code.n(); ++i)
    if (p_eval(f, sigma, code.support()[i]) == 0) error.set(i);
  if (error.weight() != static_cast<std::size_t>(sigma.degree()))
    throw DecodeFailure("patterson: locator does not split over the support");

  out.result = finish(code, received, std::move(error));
  out.result.locator = ErrorLocator{p_monic(f, sigma), static_cast<std::size_t>(sigma.degree())};
  return out;
}

}  // namespace goppa
