#include "wernerdec/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wernerdec {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  k = std::min(k, n - k);
  for (int i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;  // always exact: product of j consecutive integers is divisible by j!
  }
  return out;
}

Integer int_pow(const Integer& base, int exp) {
  if (exp < 0) throw std::domain_error("int_pow: negative exponent");
  Integer out = 1;
  Integer b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) out *= b;
    if (e > 1) b *= b;
  }
  return out;
}

Rational rat_pow(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    return rat_pow(Rational(1) / base, -exp);
  }
  Rational out = 1;
  Rational b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) out *= b;
    if (e > 1) b *= b;
  }
  return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

int sign(const Rational& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string int_part, frac_part;
  long exponent = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) int_part += s[pos++];
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac_part += s[pos++];
  }
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::string es;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) es += s[pos++];
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) es += s[pos++];
    if (es.empty() || es == "+" || es == "-") throw std::invalid_argument("parse_rational: bad exponent in '" + text + "'");
    exponent = std::stol(es);
  }
  if (pos != s.size() || (int_part.empty() && frac_part.empty()))
    throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");

  Integer mantissa(int_part.empty() ? "0" : int_part);
  for (char c : frac_part) {
    mantissa *= 10;
    mantissa += c - '0';
  }
  long scale = exponent - static_cast<long>(frac_part.size());
  Rational value(mantissa);
  if (scale > 0)
    value *= Rational(int_pow(Integer(10), static_cast<int>(scale)));
  else if (scale < 0)
    value /= Rational(int_pow(Integer(10), static_cast<int>(-scale)));
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    std::string num_digits = (!num.empty() && (num[0] == '+' || num[0] == '-')) ? num.substr(1) : num;
    if (!all_digits(num_digits) || !all_digits(den))
      throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    return Rational(n) / Rational(d);
  }
  return parse_decimal(s);
}

std::string format_fraction(const Rational& x) {
  std::ostringstream out;
  out << numerator(x);
  if (denominator(x) != 1) out << '/' << denominator(x);
  return out.str();
}

std::string format_exact_decimal(const Rational& x) {
  Integer num = numerator(x);
  Integer den = denominator(x);
  bool negative = num < 0;
  if (negative) num = -num;
  // Reduce den to 1 by multiplying up to a power of ten.
  int twos = 0, fives = 0;
  Integer d = den;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) throw std::domain_error("format_exact_decimal: non-terminating decimal " + format_fraction(x));
  int shift = std::max(twos, fives);
  num *= int_pow(Integer(2), shift - twos) * int_pow(Integer(5), shift - fives);
  std::string digits = num.str();
  std::string out = negative ? "-" : "";
  if (shift == 0) return out + digits;
  if (static_cast<int>(digits.size()) <= shift)
    digits.insert(0, shift + 1 - digits.size(), '0');
  digits.insert(digits.size() - shift, ".");
  return out + digits;
}

Rational truncate_digits(const Rational& x, int digits) {
  Integer scale = int_pow(Integer(10), digits);
  Rational scaled = x * Rational(scale);
  Integer fl = numerator(scaled) / denominator(scaled);
  if (scaled < 0 && Rational(fl) != scaled) fl -= 1;  // mpz division truncates toward zero
  return Rational(fl) / Rational(scale);
}

std::string format_truncated(const Rational& x, int digits) {
  if (x < 0) throw std::domain_error("format_truncated: negative value");
  Integer scale = int_pow(Integer(10), digits);
  Rational scaled = x * Rational(scale);
  Integer fl = numerator(scaled) / denominator(scaled);
  Integer whole = fl / scale;
  Integer frac = fl % scale;
  std::string frac_digits = frac.str();
  frac_digits.insert(0, digits - frac_digits.size(), '0');
  return whole.str() + "." + frac_digits;
}

}  // namespace wernerdec
