#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conemetric {

// Exact rational number on 64-bit words, always stored reduced with a
// positive denominator. Intermediate products are carried in 128 bits;
// a result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  static Rational parse(std::string_view text) {
    std::string s(text);
    // trim
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty rational literal");
    s = s.substr(first, last - first + 1);
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(parse_int(s), 1);
      }
      return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    } catch (const std::overflow_error&) {
      throw std::invalid_argument("rational literal out of range: " + s);
    }
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }

  bool is_even_integer() const { return den_ == 1 && num_ % 2 == 0; }

  // Integer ≥ 0 that is ≡ 0 mod 2: the "nonnegative even number" test used by
  // the parity conditions.
  bool is_nonnegative_even_integer() const {
    return den_ == 1 && num_ >= 0 && num_ % 2 == 0;
  }

  std::int64_t as_integer() const {
    if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
    return num_;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("bad integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
      if (s.size() == 1) throw std::invalid_argument("bad integer literal");
    }
    i128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad integer literal: " + std::string(s));
      v = v * 10 + (s[i] - '0');
      if (v > i128(INT64_MAX)) throw std::overflow_error("integer literal overflow");
    }
    return neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
  }

  static Rational from128(i128 n, i128 d) {
    Rational r;
    r.assign128(n, d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) { assign128(n, d); }

  void assign128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > i128(INT64_MAX) || n < i128(INT64_MIN) || d > i128(INT64_MAX))
      throw std::overflow_error("rational overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

inline std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const __int128 l = __int128(a) / std::gcd(a, b) * b;
  if (l > __int128(INT64_MAX) || l < -__int128(INT64_MAX)) throw std::overflow_error("lcm overflow");
  const std::int64_t r = static_cast<std::int64_t>(l);
  return r < 0 ? -r : r;
}

}  // namespace conemetric
