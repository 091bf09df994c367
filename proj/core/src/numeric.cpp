#include "chessdeg/numeric.hpp"

#include "chessdeg/errors.hpp"

#include <cctype>

namespace chessdeg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s))
    throw MalformedInput("not an exact number: \"" + std::string(whole) + "\"");
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
      throw MalformedInput("signed denominator in \"" + std::string(text) + "\"");
    BigInt den = parse_integer(den_text, text);
    if (den == 0) throw MalformedInput("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer(text, text));

  auto int_part = text.substr(0, dot);
  auto frac_part = text.substr(dot + 1);
  bool negative = false;
  if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
    negative = int_part.front() == '-';
    int_part.remove_prefix(1);
  }
  if (!all_digits(int_part) || !all_digits(frac_part))
    throw MalformedInput("not an exact number: \"" + std::string(text) + "\"");

  BigInt whole{std::string(int_part)};
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  BigInt frac{std::string(frac_part)};
  Rational value(BigInt(whole * scale + frac), scale);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const BigInt& value) { return value.str(); }

std::int64_t mod_residue(const BigInt& value, std::int64_t modulus) {
  if (modulus <= 0) throw ParameterError("modulus must be positive");
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::int64_t>();
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace chessdeg
