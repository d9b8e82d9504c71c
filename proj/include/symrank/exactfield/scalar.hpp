#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "symrank/exactfield/quadext.hpp"
#include "symrank/exactfield/rational.hpp"

namespace symrank {

/// A field element as exchanged across module boundaries: a plain rational
/// or an element of some Q(sqrt d).
using ExactScalar = std::variant<Rational, QuadExt>;

inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::string to_string(const QuadExt& x) { return x.to_string(); }
inline std::string to_string(const ExactScalar& s) {
  return std::visit([](const auto& v) { return v.to_string(); }, s);
}

/// Text form: rationals "p/q" or "p"; quadratic elements "a+b*sqrt(d)".
inline ExactScalar parse_scalar(std::string_view text) {
  if (text.find("sqrt") != std::string_view::npos) return QuadExt::parse(text);
  return Rational::parse(text);
}

/// Collapses irrational-free QuadExt values to Rational.
inline ExactScalar simplify(const ExactScalar& s) {
  if (const auto* q = std::get_if<QuadExt>(&s); q != nullptr && q->is_rational()) return q->a();
  return s;
}

inline QuadExt to_quadext(const ExactScalar& s) {
  return std::visit([](const auto& v) { return QuadExt(v); }, s);
}

// Conversions used by code templated over the scalar field.
template <class F>
F scalar_cast(const ExactScalar& s);

template <>
inline Rational scalar_cast<Rational>(const ExactScalar& s) {
  if (const auto* r = std::get_if<Rational>(&s)) return *r;
  return std::get<QuadExt>(s).as_rational();
}

template <>
inline QuadExt scalar_cast<QuadExt>(const ExactScalar& s) {
  return to_quadext(s);
}

inline Rational rational_part(const Rational& r) { return r; }
inline Rational rational_part(const QuadExt& x) { return x.as_rational(); }

template <class F>
F parse_as(std::string_view text) {
  return scalar_cast<F>(parse_scalar(text));
}

/// Roots of x^2 + p x + q, larger root first.
struct QuadraticRoots {
  ExactScalar plus;
  ExactScalar minus;
};

/// Exact real roots of the monic quadratic x^2 + p x + q. Roots are Rational
/// when the discriminant is a rational square, otherwise elements of
/// Q(sqrt d) with d the square-free part of the discriminant.
inline QuadraticRoots solve_quadratic_monic(const Rational& p, const Rational& q,
                                            std::uint64_t trial_bound = kDefaultTrialBound) {
  const Rational disc = p * p - Rational(4) * q;
  if (disc.sign() < 0) {
    throw NoRealRoot("x^2 + (" + p.to_string() + ")x + (" + q.to_string() +
                     ") has negative discriminant");
  }
  const Rational half_p = p / Rational(2);
  // sqrt(N/M) = sqrt(N*M)/M = s*sqrt(core)/M
  const BigInt num = disc.numerator();
  const BigInt den = disc.denominator();
  if (disc.is_zero()) return {-half_p, -half_p};
  const auto split = square_free_split(num * den, trial_bound);
  const Rational coeff = Rational::reduce(split.square, den * 2);
  if (split.core == 1) return {-half_p + coeff, -half_p - coeff};
  if (!split.core.fits_slong_p()) throw UnsupportedParameter("discriminant core too large");
  const auto d = static_cast<std::int64_t>(split.core.get_si());
  return {QuadExt(-half_p, coeff, d), QuadExt(-half_p, -coeff, d)};
}

}  // namespace symrank
