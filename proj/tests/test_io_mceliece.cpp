#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "goppa/errors.hpp"
#include "goppa/io.hpp"
#include "goppa/mceliece.hpp"
#include "test_util.hpp"

using namespace goppa;
using goppa::testing::make_code;
using goppa::testing::random_bits;
using goppa::testing::random_error;

namespace {

std::string serialize(const GoppaCode& code) {
  std::ostringstream out;
  write_code(out, code);
  return out.str();
}

}  // namespace

TEST_CASE("code file round trip is byte-identical") {
  for (auto [m, r, n] : {std::tuple{3u, 1u, 7u}, std::tuple{5u, 3u, 28u}, std::tuple{9u, 4u, 300u}}) {
    const GoppaCode code = make_code(m, r, n, m + r);
    const std::string text = serialize(code);
    std::istringstream in(text);
    const GoppaCode back = read_code(in);
    CHECK(serialize(back) == text);
    CHECK(back.G() == code.G());
    CHECK(back.support() == code.support());
  }
}

TEST_CASE("code file layout") {
  const GoppaCode code = make_code(3, 1, 7, 1);
  const std::string text = serialize(code);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "goppa m=3 n=7 r=1 fieldpoly=b");
  std::getline(in, line);
  CHECK(line == "g= 0 1");
  std::getline(in, line);
  CHECK(line.rfind("L= ", 0) == 0);
  std::getline(in, line);
  CHECK(line == "G:");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    CHECK(line.size() == 7);
    ++rows;
  }
  CHECK(rows == code.k());
}

TEST_CASE("malformed code files") {
  const std::string good = serialize(make_code(4, 2, 15, 3));
  auto parse = [](std::string text) {
    std::istringstream in(text);
    return read_code(in);
  };
  CHECK_NOTHROW(parse(good));
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("goppa m=4 n=15\n"), ParseError);
  std::string s = good;
  s.replace(s.find("m=4"), 3, "m=x");
  CHECK_THROWS_AS(parse(s), ParseError);
  s = good;
  s.replace(s.find("fieldpoly=13"), 12, "fieldpoly=1f");
  CHECK_THROWS_AS(parse(s), ParseError);
  // flip one bit of G
  s = good;
  const auto gpos = s.find("G:\n") + 3;
  s[gpos] = s[gpos] == '0' ? '1' : '0';
  CHECK_THROWS_AS(parse(s), ParseError);
  // truncated G
  s = good.substr(0, good.size() - 5);
  CHECK_THROWS_AS(parse(s), ParseError);
  CHECK_THROWS_AS(parse_word("01a1"), ParseError);
  CHECK(parse_word("  0110\n") == BitVec::from_string("0110"));
}

TEST_CASE("McEliece keys") {
  const auto keys = mceliece::keygen(5, 2, 31, 11);
  CHECK(keys.pub.G.rank() == keys.priv.code.k());
  CHECK(keys.pub.t == 2);
  CHECK(keys.priv.S.rank() == keys.priv.code.k());
  CHECK(keys.priv.S * keys.priv.S_inv == BitMatrix::identity(keys.priv.code.k()));
  CHECK(keys.priv.code.G() * mceliece::permutation_matrix(keys.priv.perm) ==
        keys.priv.S_inv * keys.pub.G);
  std::set<std::size_t> perm(keys.priv.perm.begin(), keys.priv.perm.end());
  CHECK(perm.size() == 31);

  const auto again = mceliece::keygen(5, 2, 31, 11);
  CHECK(again.pub.G == keys.pub.G);
  CHECK(again.priv.perm == keys.priv.perm);
  CHECK(!(mceliece::keygen(5, 2, 31, 12).pub.G == keys.pub.G));
  CHECK_THROWS_AS(mceliece::keygen(9, 2, 100, 1), std::invalid_argument);

  std::ostringstream out;
  mceliece::write_keys(out, keys);
  std::istringstream in(out.str());
  const auto back = mceliece::read_keys(in);
  CHECK(back.pub.G == keys.pub.G);
  std::ostringstream out2;
  mceliece::write_keys(out2, back);
  CHECK(out2.str() == out.str());
}

TEST_CASE("McEliece round trip at every weight") {
  const auto keys = mceliece::keygen(5, 2, 31, 21);
  const std::size_t k = keys.priv.code.k();
  Rng rng(22);
  CHECK(mceliece::encrypt(keys.pub, BitVec(k), 5) == mceliece::error_pattern(31, 2, 5));
  std::set<std::uint64_t> totals;
  for (int trial = 0; trial < 100; ++trial) {
    const BitVec msg = random_bits(rng, k);
    const std::size_t w = trial % (keys.pub.t + 1);
    const BitVec c = mceliece::encrypt(keys.pub, msg, 1000 + trial, w);
    const auto dec = mceliece::decrypt(keys, c);
    CHECK(dec.message == msg);
    CHECK(dec.error.weight() == w);
    totals.insert(dec.ops.total());
  }
  CHECK(totals.size() == 1);
}

TEST_CASE("McEliece beyond capacity is detected or decodes to a nearby codeword") {
  const auto keys = mceliece::keygen(5, 2, 31, 31);
  Rng rng(32);
  int failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const BitVec msg = random_bits(rng, keys.priv.code.k());
    const BitVec c = mceliece::encrypt(keys.pub, msg, 500 + trial, keys.pub.t + 1);
    try {
      const auto dec = mceliece::decrypt(keys, c);
      CHECK(dec.message != msg);
      CHECK(dec.error.weight() <= keys.pub.t);
    } catch (const DecodeFailure&) {
      ++failures;
    }
  }
  CHECK(failures > 0);
  CHECK_THROWS_AS(mceliece::decrypt(keys, BitVec(30)), std::invalid_argument);
}
