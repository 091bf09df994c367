#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace chessdeg {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses an exact rational from "p", "p/q" or a finite decimal such as "-0.25".
/// Throws MalformedInput on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Sign of a permutation given as a sequence of distinct comparable keys:
/// +1 if an even number of transpositions sorts it, -1 otherwise.
template <typename Seq>
int permutation_sign(const Seq& seq) {
  int sign = 1;
  const auto n = seq.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (seq[j] < seq[i]) sign = -sign;
  return sign;
}

/// Non-negative residue of `value` modulo `modulus` (> 0).
std::int64_t mod_residue(const BigInt& value, std::int64_t modulus);

bool is_prime(std::int64_t n);

}  // namespace chessdeg
