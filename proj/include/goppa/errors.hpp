#pragma once

#include <stdexcept>
#include <string>

namespace goppa {

/// The decoder could not produce a codeword within distance t of the received word.
class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Q-polynomial and sigma locators disagreed; an internal invariant was broken.
class ModeDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text input (code files, key files, word strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace goppa
