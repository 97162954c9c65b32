#include "goppa/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "goppa/bench.hpp"
#include "goppa/errors.hpp"
#include "goppa/io.hpp"
#include "goppa/mceliece.hpp"
#include "goppa/newton_decoder.hpp"

namespace goppa {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GoppaCode load_code(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open code file " + path);
  return read_code(f);
}

mceliece::KeyPair load_keys(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open key file " + path);
  return mceliece::read_keys(f);
}

template <class Fn>
void write_to(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  fn(f);
  if (!f) throw IoError("write failed for " + path);
}

// Word from a flag, or the first non-empty line of input.
BitVec word_arg(const std::string& flag, std::istream& in, const char* what) {
  if (!flag.empty()) return parse_word(flag);
  std::string line;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_word(line);
  throw ParseError(std::string("no ") + what + " given");
}

void require_length(const BitVec& v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw std::invalid_argument(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                                std::to_string(n));
}

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) throw ParseError("bad weight '" + std::string(s) + "'");
  return v;
}

// "a..b" or "w1,w2,...".
std::vector<std::size_t> parse_weights(const std::string& text, std::size_t t) {
  std::vector<std::size_t> out;
  if (text.empty()) {
    for (std::size_t w = 0; w <= t; ++w) out.push_back(w);
    return out;
  }
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::string hi = text.substr(dots + 2);
    const std::size_t a = parse_size(text.substr(0, dots));
    const std::size_t b = hi == "t" ? t : parse_size(hi);
    if (a > b) throw ParseError("empty weight range");
    for (std::size_t w = a; w <= b; ++w) out.push_back(w);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_size(item));
  return out;
}

void print_ops(std::ostream& out, const OpCounter& ops) {
  out << "ops mults=" << ops.field_mults << " invs=" << ops.field_invs << " row_ops=" << ops.row_ops
      << " total=" << ops.total() << '\n';
}

struct Options {
  unsigned m = 0, r = 0;
  std::size_t n = 0, weight = 0, trials = 100;
  std::uint64_t seed = 1;
  std::string out, code, key, message, word, received, mode = "q", profile = "adaptive", weights;
  bool count_ops = false;
};

std::size_t default_n(unsigned m, std::size_t n) {
  if (n) return n;
  if (m < 2 || m > 16) throw std::invalid_argument("m must be in [2, 16]");
  return (std::size_t{1} << m) - 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary Goppa codes with a Newton-identity decoder"};
  app.require_subcommand(1);
  Options o;

  auto* keygen = app.add_subcommand("keygen", "generate a random code and write it as a code file");
  keygen->add_option("--m", o.m, "field degree")->required();
  keygen->add_option("--r", o.r, "Goppa polynomial degree")->required();
  keygen->add_option("--n", o.n, "code length (default 2^m - 1)");
  keygen->add_option("--seed", o.seed, "RNG seed");
  keygen->add_option("--out", o.out, "output file (default stdout)");

  auto* enc = app.add_subcommand("encode", "encode a message");
  enc->add_option("--code", o.code, "code file")->required();
  enc->add_option("--message", o.message, "k-bit message (default: read from stdin)");

  auto* corrupt = app.add_subcommand("corrupt", "flip a random set of bits");
  corrupt->add_option("--weight", o.weight, "number of bits to flip")->required();
  corrupt->add_option("--seed", o.seed, "RNG seed");
  corrupt->add_option("--word", o.word, "word to corrupt (default: read from stdin)");

  auto* dec = app.add_subcommand("decode", "decode a received word");
  dec->add_option("--code", o.code, "code file")->required();
  dec->add_option("--received", o.received, "received word (default: read from stdin)");
  dec->add_option("--mode", o.mode, "locator: q, sigma or both")->check(CLI::IsMember({"q", "sigma", "both"}));
  dec->add_option("--profile", o.profile, "adaptive or fixed")->check(CLI::IsMember({"adaptive", "fixed"}));
  dec->add_flag("--count-ops", o.count_ops, "print the operation counter");

  auto* bench = app.add_subcommand("bench", "operation counts and Patterson iterations per error weight");
  bench->add_option("--code", o.code, "code file")->required();
  bench->add_option("--weights", o.weights, "a..b or comma list (default 0..t)");
  bench->add_option("--trials", o.trials, "trials per weight")->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed, "RNG seed");
  bench->add_option("--out", o.out, "CSV file (default stdout)");

  auto* mc = app.add_subcommand("mceliece", "toy McEliece wrapper");
  mc->require_subcommand(1);
  auto* mc_keygen = mc->add_subcommand("keygen", "generate a key file");
  mc_keygen->add_option("--m", o.m, "field degree")->required();
  mc_keygen->add_option("--r", o.r, "Goppa polynomial degree")->required();
  mc_keygen->add_option("--n", o.n, "code length (default 2^m - 1)");
  mc_keygen->add_option("--seed", o.seed, "RNG seed");
  mc_keygen->add_option("--out", o.out, "output file (default stdout)");
  auto* mc_enc = mc->add_subcommand("encrypt", "encrypt a k-bit message");
  mc_enc->add_option("--key", o.key, "key file")->required();
  mc_enc->add_option("--message", o.message, "message (default: read from stdin)");
  mc_enc->add_option("--seed", o.seed, "error seed");
  auto* mc_weight = mc_enc->add_option("--weight", o.weight, "error weight (default t)");
  auto* mc_dec = mc->add_subcommand("decrypt", "decrypt a ciphertext");
  mc_dec->add_option("--key", o.key, "key file")->required();
  mc_dec->add_option("--ciphertext", o.received, "ciphertext (default: read from stdin)");
  mc_dec->add_option("--profile", o.profile, "adaptive or fixed")->check(CLI::IsMember({"adaptive", "fixed"}));
  mc_dec->add_flag("--count-ops", o.count_ops, "print the operation counter");

  std::vector<const char*> argv{"goppa"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Profile profile = o.profile == "fixed" ? Profile::fixed : Profile::adaptive;

  try {
    if (*keygen) {
      Rng rng(o.seed);
      const GoppaCode code = random_code(std::make_shared<const Field>(o.m), o.r, default_n(o.m, o.n), rng);
      write_to(o.out, out, [&](std::ostream& s) { write_code(s, code); });
      std::ostream& info = (o.out.empty() || o.out == "-") ? err : out;
      info << "n=" << code.n() << " k=" << code.k() << " r=" << code.r() << " t=" << code.t() << '\n';
    } else if (*enc) {
      const GoppaCode code = load_code(o.code);
      const BitVec msg = word_arg(o.message, in, "message");
      require_length(msg, code.k(), "message");
      out << encode(code, msg).to_string() << '\n';
    } else if (*corrupt) {
      const BitVec word = word_arg(o.word, in, "word");
      Rng rng(o.seed);
      out << (word ^ random_error_vector(word.size(), o.weight, rng)).to_string() << '\n';
    } else if (*dec) {
      const GoppaCode code = load_code(o.code);
      const BitVec received = word_arg(o.received, in, "received word");
      require_length(received, code.n(), "received word");
      const LocateMode mode = o.mode == "both" ? LocateMode::both : o.mode == "sigma" ? LocateMode::sigma : LocateMode::q;
      const DecodeResult res = decode(code, received, mode, profile);
      out << "error=" << res.error.to_string() << '\n';
      out << "codeword=" << res.codeword.to_string() << '\n';
      out << "message=" << res.message.to_string() << '\n';
      out << "weight=" << res.error.weight() << '\n';
      if (o.count_ops) print_ops(out, res.ops);
    } else if (*bench) {
      const GoppaCode code = load_code(o.code);
      const BenchReport report = run_bench(code, parse_weights(o.weights, code.t()), o.trials, o.seed);
      write_to(o.out, out, [&](std::ostream& s) { write_csv(s, report); });
    } else if (*mc_keygen) {
      const auto keys = mceliece::keygen(o.m, o.r, default_n(o.m, o.n), o.seed);
      write_to(o.out, out, [&](std::ostream& s) { mceliece::write_keys(s, keys); });
      std::ostream& info = (o.out.empty() || o.out == "-") ? err : out;
      info << "n=" << keys.priv.code.n() << " k=" << keys.priv.code.k() << " t=" << keys.pub.t << '\n';
    } else if (*mc_enc) {
      const auto keys = load_keys(o.key);
      const BitVec msg = word_arg(o.message, in, "message");
      require_length(msg, keys.priv.code.k(), "message");
      const std::size_t w = mc_weight->count() ? o.weight : keys.pub.t;
      out << mceliece::encrypt(keys.pub, msg, o.seed, w).to_string() << '\n';
    } else if (*mc_dec) {
      const auto keys = load_keys(o.key);
      const BitVec c = word_arg(o.received, in, "ciphertext");
      require_length(c, keys.priv.code.n(), "ciphertext");
      const auto d = mceliece::decrypt(keys, c, profile);
      out << "message=" << d.message.to_string() << '\n';
      if (o.count_ops) print_ops(out, d.ops);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DecodeFailure& e) {
    err << "decode failure: " << e.what() << '\n';
    return kExitDecode;
  } catch (const ModeDisagreement& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace goppa
