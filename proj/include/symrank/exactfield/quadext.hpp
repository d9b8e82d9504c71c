#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "symrank/error.hpp"
#include "symrank/exactfield/rational.hpp"
#include "symrank/exactfield/squarefree.hpp"

namespace symrank {

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt d).
///
/// The discriminant d is a square-free integer > 1 and is shared by every
/// element taking part in one computation. A rational embedded through the
/// converting constructor has b = 0 and no discriminant yet (d() == 0); it
/// adopts the discriminant of whatever it is combined with. Combining two
/// elements whose discriminants are both set and differ throws
/// IncompatibleField.
class QuadExt {
 public:
  QuadExt() = default;

  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)

  template <std::integral I>
  QuadExt(I a) : a_(a) {}  // NOLINT(implicit)

  QuadExt(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    validate_discriminant(d);
  }

  static void validate_discriminant(std::int64_t d) {
    if (d < 2) throw UnsupportedParameter("discriminant must be a square-free integer > 1");
    const auto split = square_free_split(BigInt(static_cast<long>(d)));
    if (split.square != 1) {
      throw UnsupportedParameter("discriminant " + std::to_string(d) + " is not square-free");
    }
  }

  /// Parses "a", "a+b*sqrt(d)", "a-b*sqrt(d)", "b*sqrt(d)" and "sqrt(d)".
  static QuadExt parse(std::string_view text);

  [[nodiscard]] const Rational& a() const { return a_; }
  [[nodiscard]] const Rational& b() const { return b_; }
  [[nodiscard]] std::int64_t d() const { return d_; }

  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// The rational value; throws if b != 0.
  [[nodiscard]] const Rational& as_rational() const {
    if (!is_rational()) throw PreconditionError("element " + to_string() + " is irrational");
    return a_;
  }

  [[nodiscard]] QuadExt conjugate() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
  }

  /// a^2 - d b^2, the field norm.
  [[nodiscard]] Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  /// Sign of the real number a + b*sqrt(d).
  [[nodiscard]] int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare a^2 with d b^2.
    const Rational diff = a_ * a_ - Rational(d_) * b_ * b_;
    return diff.sign() * sa;
  }

  [[nodiscard]] QuadExt inverse() const {
    if (is_zero()) throw DivisionByZero();
    const Rational n = norm();
    QuadExt r = conjugate();
    r.a_ /= n;
    r.b_ /= n;
    return r;
  }

  [[nodiscard]] std::string to_string() const {
    if (d_ == 0) return a_.to_string();
    std::string out = a_.to_string();
    if (b_.sign() < 0) {
      out += "-" + (-b_).to_string();
    } else {
      out += "+" + b_.to_string();
    }
    out += "*sqrt(" + std::to_string(d_) + ")";
    return out;
  }

  QuadExt& operator+=(const QuadExt& o) {
    d_ = common_d(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    d_ = common_d(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    d_ = common_d(o);
    Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) {
    common_d(o);
    return *this *= o.inverse();
  }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(QuadExt x) {
    x.a_ = -x.a_;
    x.b_ = -x.b_;
    return x;
  }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    x.common_d(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

 private:
  std::int64_t common_d(const QuadExt& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw IncompatibleField("cannot combine Q(sqrt " + std::to_string(d_) + ") with Q(sqrt " +
                            std::to_string(o.d_) + ")");
  }

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

inline QuadExt QuadExt::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  const auto at = s.find("sqrt(");
  if (at == std::string::npos) return QuadExt(Rational::parse(s));
  const auto close = s.find(')', at);
  if (close == std::string::npos || close + 1 != s.size()) {
    throw ParseError("malformed quadratic element: '" + std::string(text) + "'");
  }
  const Rational d_value = Rational::parse(s.substr(at + 5, close - at - 5));
  if (!d_value.is_integer()) throw ParseError("discriminant must be an integer");
  const long d = d_value.numerator().get_si();
  std::string head = s.substr(0, at);  // "a+b*", "a-b*", "b*", "", "-", "a+"
  if (!head.empty() && head.back() == '*') head.pop_back();
  // Locate the sign that separates a from b, skipping a leading sign and
  // any sign inside a/b denominators (there are none in p/q syntax).
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a;
  std::string b_text;
  if (split == std::string::npos) {
    b_text = head;
  } else {
    a = Rational::parse(head.substr(0, split));
    b_text = head.substr(split);
  }
  Rational b;
  if (b_text.empty() || b_text == "+") {
    b = 1;
  } else if (b_text == "-") {
    b = -1;
  } else {
    b = Rational::parse(b_text);
  }
  return QuadExt(a, b, d);
}

}  // namespace symrank
