#include "goppa/io.hpp"

#include <charconv>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "goppa/errors.hpp"

namespace goppa {

namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of input, expected ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

template <class T>
T parse_number(std::string_view text, int base, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ParseError(std::string("bad ") + what + ": '" + std::string(text) + "'");
  return value;
}

// "key=value" -> value, checking the key.
std::string_view field_value(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=')
    throw ParseError("expected " + std::string(key) + "=..., got '" + std::string(token) + "'");
  return token.substr(key.size() + 1);
}

std::string_view strip_prefix(std::string_view line, std::string_view prefix) {
  if (line.substr(0, prefix.size()) != prefix)
    throw ParseError("expected line starting with '" + std::string(prefix) + "'");
  return line.substr(prefix.size());
}

}  // namespace

void write_code(std::ostream& out, const GoppaCode& code) {
  const Field& f = code.field();
  std::ostringstream poly;
  poly << std::hex << f.reduction_poly();
  out << "goppa m=" << f.degree() << " n=" << code.n() << " r=" << code.r() << " fieldpoly=" << poly.str() << '\n';
  out << "g= " << to_string(f, code.g()) << '\n';
  out << "L=";
  for (Elem a : code.support()) out << ' ' << f.to_hex(a);
  out << '\n';
  write_matrix_block(out, "G", code.G());
}

GoppaCode read_code(std::istream& in) {
  std::istringstream header(next_line(in, "code header"));
  std::string magic, tm, tn, tr, tp, extra;
  header >> magic >> tm >> tn >> tr >> tp;
  if (magic != "goppa" || tp.empty() || (header >> extra)) throw ParseError("malformed code header");
  const auto m = parse_number<unsigned>(field_value(tm, "m"), 10, "m");
  const auto n = parse_number<std::size_t>(field_value(tn, "n"), 10, "n");
  const auto r = parse_number<std::size_t>(field_value(tr, "r"), 10, "r");
  const auto fieldpoly = parse_number<std::uint32_t>(field_value(tp, "fieldpoly"), 16, "fieldpoly");

  std::shared_ptr<const Field> field;
  try {
    field = std::make_shared<const Field>(m, fieldpoly);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid field: ") + e.what());
  }

  Poly g;
  std::vector<Elem> support;
  try {
    g = poly_from_string(*field, strip_prefix(next_line(in, "g= line"), "g="));
    std::istringstream ls{std::string(strip_prefix(next_line(in, "L= line"), "L="))};
    std::string tok;
    while (ls >> tok) support.push_back(field->from_hex(tok));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (g.degree() != static_cast<int>(r)) throw ParseError("g degree does not match r");
  if (support.size() != n) throw ParseError("support length does not match n");

  GoppaCode code = [&] {
    try {
      return build_code(field, std::move(support), std::move(g));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("invalid code: ") + e.what());
    }
  }();
  const BitMatrix stored = read_matrix_block(in, "G", code.k(), code.n());
  if (!(stored == code.G())) throw ParseError("stored generator matrix does not match the code");
  return code;
}

void write_matrix_block(std::ostream& out, const std::string& tag, const BitMatrix& m) {
  out << tag << ":\n";
  for (std::size_t i = 0; i < m.rows(); ++i) out << m.row(i).to_string() << '\n';
}

BitMatrix read_matrix_block(std::istream& in, const std::string& tag, std::size_t rows, std::size_t cols) {
  if (next_line(in, (tag + ":").c_str()) != tag + ":") throw ParseError("expected '" + tag + ":'");
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const BitVec row = parse_word(next_line(in, "matrix row"));
    if (row.size() != cols) throw ParseError(tag + " row has wrong length");
    m.row(i) = row;
  }
  return m;
}

BitVec parse_word(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto last = text.find_last_not_of(" \t\r\n");
  const std::string_view body =
      first == std::string::npos ? std::string_view{} : std::string_view(text).substr(first, last - first + 1);
  try {
    return BitVec::from_string(body);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace goppa
