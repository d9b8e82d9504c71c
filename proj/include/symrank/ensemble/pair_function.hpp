#pragma once

#include <string>
#include <utility>
#include <variant>

#include "symrank/error.hpp"
#include "symrank/exactfield/rational.hpp"

namespace symrank {

/// The functions f(x, y) the ensemble is built from. The catalog is closed:
///   linear(theta)   f(x, y) = x + (1 - 2 theta) y,   0 < theta < 1
///   squared_diff()  f(x, y) = (x - y)^2
///   table(...)      explicit values on a two-letter alphabet {alpha, beta}
template <class F>
class PairFunction {
 public:
  struct LinearTheta {
    Rational theta;
  };
  struct SquaredDiff {};
  struct Table {
    F alpha;
    F beta;
    F aa;
    F ab;
    F ba;
    F bb;
  };
  using Variant = std::variant<LinearTheta, SquaredDiff, Table>;

  static PairFunction linear(const Rational& theta) {
    if (theta.sign() <= 0 || theta >= Rational(1)) {
      throw PreconditionError("theta must lie in (0, 1), got " + theta.to_string());
    }
    return PairFunction(LinearTheta{theta});
  }

  static PairFunction squared_diff() { return PairFunction(SquaredDiff{}); }

  static PairFunction table(F alpha, F beta, F aa, F ab, F ba, F bb) {
    if (alpha == beta) throw PreconditionError("table alphabet needs two distinct letters");
    return PairFunction(Table{std::move(alpha), std::move(beta), std::move(aa), std::move(ab),
                              std::move(ba), std::move(bb)});
  }

  [[nodiscard]] const Variant& variant() const { return v_; }
  [[nodiscard]] bool is_linear() const { return std::holds_alternative<LinearTheta>(v_); }
  [[nodiscard]] bool is_squared_diff() const { return std::holds_alternative<SquaredDiff>(v_); }
  [[nodiscard]] bool is_table() const { return std::holds_alternative<Table>(v_); }
  [[nodiscard]] const Rational& theta() const { return std::get<LinearTheta>(v_).theta; }
  [[nodiscard]] const Table& table_values() const { return std::get<Table>(v_); }

  /// Whether f is defined at (x, y). Only tables are partial.
  [[nodiscard]] bool defined_at(const F& x, const F& y) const {
    if (const auto* t = std::get_if<Table>(&v_)) {
      return (x == t->alpha || x == t->beta) && (y == t->alpha || y == t->beta);
    }
    return true;
  }

  F operator()(const F& x, const F& y) const {
    return std::visit(
        [&](const auto& alt) -> F {
          using Alt = std::decay_t<decltype(alt)>;
          if constexpr (std::is_same_v<Alt, LinearTheta>) {
            return x + F(Rational(1) - Rational(2) * alt.theta) * y;
          } else if constexpr (std::is_same_v<Alt, SquaredDiff>) {
            const F diff = x - y;
            return diff * diff;
          } else {
            const bool xa = (x == alt.alpha);
            const bool ya = (y == alt.alpha);
            if ((!xa && !(x == alt.beta)) || (!ya && !(y == alt.beta))) {
              throw PreconditionError("table function evaluated outside its alphabet");
            }
            if (xa) return ya ? alt.aa : alt.ab;
            return ya ? alt.ba : alt.bb;
          }
        },
        v_);
  }

  [[nodiscard]] std::string describe() const {
    return std::visit(
        [](const auto& alt) -> std::string {
          using Alt = std::decay_t<decltype(alt)>;
          if constexpr (std::is_same_v<Alt, LinearTheta>) {
            return "linear_theta(" + alt.theta.to_string() + ")";
          } else if constexpr (std::is_same_v<Alt, SquaredDiff>) {
            return "squared_diff";
          } else {
            return "table";
          }
        },
        v_);
  }

 private:
  explicit PairFunction(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// The data (f, alpha, beta) behind Sym(f; alpha^(m), beta^(n)).
template <class F>
struct TwoValuePair {
  PairFunction<F> f;
  F alpha;
  F beta;

  [[nodiscard]] F aa() const { return f(alpha, alpha); }
  [[nodiscard]] F ab() const { return f(alpha, beta); }
  [[nodiscard]] F ba() const { return f(beta, alpha); }
  [[nodiscard]] F bb() const { return f(beta, beta); }

  [[nodiscard]] bool is_good() const { return !(aa() == F(0)) && !(bb() == F(0)); }

  void require_good() const {
    if (!is_good()) throw PreconditionError("good-pair condition f(a,a) != 0, f(b,b) != 0 fails");
  }

  /// Table pair on the alphabet {alpha, beta}.
  static TwoValuePair table(F alpha, F beta, F aa, F ab, F ba, F bb) {
    return TwoValuePair{PairFunction<F>::table(alpha, beta, std::move(aa), std::move(ab),
                                               std::move(ba), std::move(bb)),
                        alpha, beta};
  }

  static TwoValuePair linear(const Rational& theta, F alpha, F beta) {
    return TwoValuePair{PairFunction<F>::linear(theta), std::move(alpha), std::move(beta)};
  }
};

}  // namespace symrank
