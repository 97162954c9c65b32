#pragma once

#include <iosfwd>
#include <string>

#include "goppa/bits.hpp"
#include "goppa/code.hpp"

namespace goppa {

/// Line-oriented text form:
///   goppa m=<m> n=<n> r=<r> fieldpoly=<hex>
///   g= <coefficients, lowest degree first, hex>
///   L= <n hex elements>
///   G:
///   <k lines of n '0'/'1'>
void write_code(std::ostream& out, const GoppaCode& code);
/// Rebuilds the code from (field, L, g) and checks the stored G against it. Throws ParseError.
GoppaCode read_code(std::istream& in);

void write_matrix_block(std::ostream& out, const std::string& tag, const BitMatrix& m);
/// Reads `<tag>:` followed by `rows` lines of `cols` bits. Throws ParseError.
BitMatrix read_matrix_block(std::istream& in, const std::string& tag, std::size_t rows, std::size_t cols);

/// A '0'/'1' word, surrounding whitespace ignored. Throws ParseError.
BitVec parse_word(const std::string& text);

}  // namespace goppa
