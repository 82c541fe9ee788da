#include "cplusmt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cplusmt {

Rational parseRational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty numeral");
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-' || text[pos] == '+') {
    negative = text[pos] == '-';
    ++pos;
  }
  BigInt num = 0;
  BigInt den = 1;
  bool sawDigit = false;
  for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
    num = num * 10 + (text[pos] - '0');
    sawDigit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      sawDigit = true;
    }
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    BigInt d = 0;
    bool sawDen = false;
    for (; pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])); ++pos) {
      d = d * 10 + (text[pos] - '0');
      sawDen = true;
    }
    if (!sawDen || d == 0) throw std::invalid_argument("bad rational: " + text);
    den = d;
  }
  if (!sawDigit || pos != text.size()) throw std::invalid_argument("bad numeral: " + text);
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

std::string ratioString(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

std::string decimalString(const Rational& q, int maxFracDigits) {
  BigInt den = denominator(q);
  // A rational has a finite decimal expansion iff den = 2^a * 5^b.
  BigInt d = den;
  int frac = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++frac;
  }
  int fives = 0;
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  frac = frac > fives ? frac : fives;
  if (d != 1 || frac > maxFracDigits) return ratioString(q);
  BigInt scaled = numerator(q);
  for (int i = 0; i < frac; ++i) scaled *= 10;
  scaled /= den;
  bool neg = scaled < 0;
  std::string digits = (neg ? BigInt(-scaled) : scaled).str();
  if (frac == 0) return (neg ? "-" : "") + digits;
  while (static_cast<int>(digits.size()) <= frac) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - frac, ".");
  return (neg ? "-" : "") + digits;
}

double toDouble(const Rational& q) { return q.convert_to<double>(); }

}  // namespace cplusmt
