#include "sccp/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace sccp {

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  // factor the denominator as 2^a * 5^b * rest
  std::int64_t rest = den_;
  int a = 0, b = 0;
  while (rest % 2 == 0) { rest /= 2; ++a; }
  while (rest % 5 == 0) { rest /= 5; ++b; }
  if (rest != 1) return std::to_string(num_) + "/" + std::to_string(den_);
  int k = a > b ? a : b;
  __int128 scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  __int128 digits = static_cast<__int128>(num_) * (scale / den_);
  bool neg = digits < 0;
  if (neg) digits = -digits;
  std::string frac;
  for (int i = 0; i < k; ++i) { frac += static_cast<char>('0' + static_cast<int>(digits % 10)); digits /= 10; }
  std::string whole;
  if (digits == 0) whole = "0";
  while (digits > 0) { whole += static_cast<char>('0' + static_cast<int>(digits % 10)); digits /= 10; }
  std::string out = neg ? "-" : "";
  for (auto it = whole.rbegin(); it != whole.rend(); ++it) out += *it;
  out += '.';
  for (auto it = frac.rbegin(); it != frac.rend(); ++it) out += *it;
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-') { neg = true; ++i; }
  else if (text[i] == '+') { ++i; }
  auto read_digits = [&](std::int64_t& out) {
    std::size_t start = i;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      if (out < 0) throw std::overflow_error("rational literal too large");
      ++i;
    }
    return i > start;
  };
  std::int64_t whole = 0;
  if (!read_digits(whole)) throw std::invalid_argument("bad rational literal: " + text);
  Rational r = Rational::integer(whole);
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t start = i;
    std::int64_t frac = 0;
    if (!read_digits(frac)) throw std::invalid_argument("bad rational literal: " + text);
    std::int64_t den = 1;
    for (std::size_t d = 0; d < i - start; ++d) {
      if (den > INT64_MAX / 10) throw std::overflow_error("rational literal too precise");
      den *= 10;
    }
    r = r + Rational(frac, den);
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    std::int64_t den = 0;
    if (!read_digits(den) || den == 0) throw std::invalid_argument("bad rational literal: " + text);
    r = Rational(whole, den);
  }
  if (i != text.size()) throw std::invalid_argument("bad rational literal: " + text);
  if (neg) r = r * Rational::integer(-1);
  return r;
}

}  // namespace sccp
