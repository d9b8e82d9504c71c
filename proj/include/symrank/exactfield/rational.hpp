#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "symrank/error.hpp"

namespace symrank {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(implicit)
    static_assert(sizeof(I) <= sizeof(long), "integer wider than long");
    if constexpr (std::is_signed_v<I>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  Rational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)

  /// n/m in canonical form.
  static Rational reduce(const BigInt& n, const BigInt& m) {
    if (m == 0) throw DivisionByZero();
    Rational r;
    r.value_ = mpq_class(n, m);
    r.value_.canonicalize();
    return r;
  }

  static Rational reduce(long n, long m) { return reduce(BigInt(n), BigInt(m)); }

  /// Parses "p", "-p", "p/q". Whitespace around the tokens is tolerated.
  static Rational parse(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (c != ' ' && c != '\t') s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty rational");
    if (s.front() == '+') s.erase(s.begin());
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
      if (part.empty()) throw ParseError("malformed rational: '" + std::string(text) + "'");
      std::size_t start = (part[0] == '-') ? 1 : 0;
      if (start == part.size()) throw ParseError("malformed rational: '" + std::string(text) + "'");
      for (std::size_t i = start; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') {
          throw ParseError("malformed rational: '" + std::string(text) + "'");
        }
      }
      return BigInt(part, 10);
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    return reduce(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
  }

  [[nodiscard]] Rational abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
  }

  [[nodiscard]] std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

inline Rational reduce(const BigInt& n, const BigInt& m) { return Rational::reduce(n, m); }

}  // namespace symrank
