#include "permgrowth/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace permgrowth {

namespace {

[[noreturn]] void bad_token(std::string_view text) {
  throw std::invalid_argument("invalid rational: '" + std::string(text) + "'");
}

Int parse_int(std::string_view digits, std::string_view whole) {
  if (digits.empty()) bad_token(whole);
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_token(whole);
  }
  return Int(std::string(digits));
}

Int pow10(unsigned e) {
  Int p = 1;
  for (unsigned i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_token(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_token(text);

  // a/b form
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Int num = parse_int(s.substr(0, slash), text);
    Int den = parse_int(s.substr(slash + 1), text);
    if (den == 0) bad_token(text);
    Rational q(num, den);
    return negative ? -q : q;
  }

  // decimal with optional exponent
  long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view etext = s.substr(epos + 1);
    if (etext.empty()) bad_token(text);
    bool eneg = false;
    if (etext.front() == '+' || etext.front() == '-') {
      eneg = etext.front() == '-';
      etext.remove_prefix(1);
    }
    Int e = parse_int(etext, text);
    if (e > 4096) bad_token(text);
    exponent = static_cast<long>(e);
    if (eneg) exponent = -exponent;
    s = s.substr(0, epos);
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_token(text);

  Int mantissa = 0;
  if (!int_part.empty()) mantissa = parse_int(int_part, text);
  for (char ch : frac_part) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_token(text);
    mantissa = mantissa * 10 + (ch - '0');
  }
  long scale = exponent - static_cast<long>(frac_part.size());

  Rational q(mantissa);
  if (scale > 0) q *= pow10(static_cast<unsigned>(scale));
  if (scale < 0) q /= pow10(static_cast<unsigned>(-scale));
  return negative ? -q : q;
}

std::string to_fraction_string(const Rational& value) {
  Int num = numerator(value);
  Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (value == 0) return "0";

  Rational q = value < 0 ? Rational(-value) : value;

  // d = number of digits left of the decimal point (may be <= 0 for q < 1)
  int d = 0;
  Rational probe = 1;
  if (q >= 1) {
    while (probe <= q) {
      probe *= 10;
      ++d;
    }
  } else {
    while (probe > q) {
      probe /= 10;
      --d;
    }
    ++d;
  }

  int frac_digits = significant_digits - d;
  Rational scaled = q;
  if (frac_digits > 0) scaled *= pow10(static_cast<unsigned>(frac_digits));
  if (frac_digits < 0) scaled /= pow10(static_cast<unsigned>(-frac_digits));
  Int rounded = floor_rational(scaled + Rational(1, 2));

  std::string digits = rounded.str();
  std::string out;
  if (frac_digits <= 0) {
    out = digits + std::string(static_cast<size_t>(-frac_digits), '0');
  } else if (digits.size() > static_cast<size_t>(frac_digits)) {
    out = digits;
    out.insert(out.size() - static_cast<size_t>(frac_digits), ".");
  } else {
    out = "0." + std::string(static_cast<size_t>(frac_digits) - digits.size(), '0') + digits;
  }
  return value < 0 ? "-" + out : out;
}

Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Int floor_rational(const Rational& value) {
  Int num = numerator(value);
  Int den = denominator(value);
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

}  // namespace permgrowth
