#include "itop/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace itop {

Rat rat_from_decimal(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&]() -> void {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  };
  bool negative = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long long frac_digits = 0;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
  bool have_int = !digits.empty();
  bool have_frac = false;
  if (i < n && text[i] == '.') {
    ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits.push_back(text[i++]);
      ++frac_digits;
      have_frac = true;
    }
  }
  if (!have_int && !have_frac) fail();
  long long exponent = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exponent = exponent * 10 + (text[i++] - '0');
      if (exponent > 100000) fail();
    }
    if (exp_negative) exponent = -exponent;
  }
  if (i != n) fail();

  // Leading zeros would make the big-integer constructor read the digits as
  // octal; drop them first.
  const std::size_t first = digits.find_first_not_of('0');
  Int mantissa = first == std::string::npos ? Int(0) : Int(digits.substr(first));
  if (negative) mantissa = -mantissa;
  long long shift = exponent - frac_digits;
  Rat value(mantissa);
  if (shift > 0) {
    Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(shift));
    value *= Rat(scale);
  } else if (shift < 0) {
    Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(-shift));
    value /= Rat(scale);
  }
  return value;
}

std::string rat_to_string(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace itop
