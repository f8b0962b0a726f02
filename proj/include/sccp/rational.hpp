#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sccp {

// Exact rational on int64 with checked arithmetic. All semiring levels go
// through this type; floating point never touches a preference value.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }
  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }

  Rational operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return make_checked(n, d);
  }
  Rational operator*(const Rational& o) const {
    // cross-reduce first so desk-scale products stay far from overflow
    std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    return make_checked(n, d);
  }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  // Prints a terminating decimal when the denominator is 2^a * 5^b,
  // otherwise "num/den". parse() accepts both forms back.
  std::string str() const;
  static Rational parse(const std::string& text);

 private:
  void reduce() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }
  static Rational make_checked(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    std::int64_t g = static_cast<std::int64_t>(gcd128(an, d));
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace sccp
