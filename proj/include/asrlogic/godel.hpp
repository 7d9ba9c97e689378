#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "asrlogic/formula.hpp"

namespace asrlogic {

using BigNat = boost::multiprecision::mpz_int;

/// Gödel number of a formula. Every formula has one; most integers are not
/// codes (0 and 17, for instance).
struct GodelCode {
  BigNat value;

  std::string to_string() const { return value.str(); }
  static GodelCode from_string(const std::string& digits);

  friend bool operator==(const GodelCode&, const GodelCode&) = default;
};

/// Cantor pairing (a+b)(a+b+1)/2 + b and its inverse.
BigNat cantor_pair(const BigNat& a, const BigNat& b);
std::pair<BigNat, BigNat> cantor_unpair(const BigNat& z);

/// Injective encoding of the full AST: code = 1 + tag + 10 * payload, where
/// the payload pairs up children codes, term codes, and identifier codes
/// (bijective base-65 over the identifier alphabet). A term is
/// kind + 3 * payload. Lists are 0 for empty and 1 + pair(head, tail)
/// otherwise.
GodelCode godel_encode(const Formula& phi);

/// Inverse of godel_encode; raises NotACodeError outside the image.
Formula godel_decode(const GodelCode& code);

}  // namespace asrlogic
