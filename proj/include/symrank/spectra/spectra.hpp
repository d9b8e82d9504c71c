#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <variant>

#include "symrank/ensemble/bigraph.hpp"
#include "symrank/ensemble/ensemble.hpp"
#include "symrank/exactfield/scalar.hpp"
#include "symrank/linalg/rank.hpp"

namespace symrank {

enum class GramSide { Left, Right, Smaller };

/// nullity(X - mu2 I) for X = B B^T (left), B^T B (right), or the smaller
/// of the two. For mu2 != 0 all three agree.
inline std::size_t gram_nullity(const BipartiteGraph& g, const Rational& mu2,
                                GramSide side = GramSide::Smaller) {
  const bool left = side == GramSide::Left ||
                    (side == GramSide::Smaller && g.left_size() < g.right_size());
  const Matrix<BigInt> b = left ? g.transposed().biadjacency<BigInt>() : g.biadjacency<BigInt>();
  // Q (B^T B) - P I with mu2 = P/Q stays integral.
  Matrix<BigInt> x = gram(b);
  const BigInt p = mu2.numerator();
  const BigInt q = mu2.denominator();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) *= q;
    x(i, i) -= p;
  }
  return nullity(x);
}

/// Multiplicity of +sqrt(mu2) as an adjacency eigenvalue of g, or 0 when
/// mu2 < 0 (then mu is imaginary and never an eigenvalue of a real
/// symmetric matrix).
inline std::size_t bigraph_multiplicity(const BipartiteGraph& g, const Rational& mu2) {
  if (mu2.is_zero()) throw PreconditionError("mu^2 = 0 is excluded by the rank theorem hypotheses");
  if (mu2.sign() < 0) return 0;
  return gram_nullity(g, mu2, GramSide::Smaller);
}

/// Same for mu2 in a quadratic field; the nullity is then taken over Q(sqrt d).
inline std::size_t bigraph_multiplicity(const BipartiteGraph& g, const QuadExt& mu2) {
  if (mu2.is_rational()) return bigraph_multiplicity(g, mu2.as_rational());
  if (mu2.sign() < 0) return 0;
  const bool left = g.left_size() < g.right_size();
  Matrix<QuadExt> x =
      gram(left ? g.transposed().biadjacency<QuadExt>() : g.biadjacency<QuadExt>());
  for (std::size_t i = 0; i < x.rows(); ++i) x(i, i) -= mu2;
  return nullity(x);
}

struct SpectralReport {
  std::size_t m = 0;
  std::size_t n = 0;
  ExactScalar mu_squared;
  std::size_t nu = 0;
  long rank_lower = 0;
  long rank_upper = 0;
  std::size_t exact_rank = 0;

  [[nodiscard]] bool holds() const {
    const long r = static_cast<long>(exact_rank);
    return rank_lower <= r && r <= rank_upper;
  }
};

/// Lower bound on rank from the diagonal blocks alone: f(a,a)(J_k - I_k) has
/// rank k for k >= 2 and rank 0 for k = 1.
inline long trivial_rank_floor(std::size_t m, std::size_t n) {
  const std::size_t big = std::max(m, n);
  return big >= 2 ? static_cast<long>(big) : 0;
}

inline void fill_bounds(SpectralReport& r) {
  const long m = static_cast<long>(r.m);
  const long n = static_cast<long>(r.n);
  const long nu = static_cast<long>(r.nu);
  r.rank_lower = std::max(trivial_rank_floor(r.m, r.n), m + n - 2 - nu);
  r.rank_upper = m + n + 2 - nu;
}

/// Builds M_G for the pair, computes nu and the exact rank, and reports the
/// bounds m+n-2-nu <= rank <= m+n+2-nu (lower floored by the diagonal blocks).
template <class F>
SpectralReport rank_sandwich(const TwoValuePair<F>& p, const BipartiteGraph& g) {
  if (p.aa() == F(0) || p.bb() == F(0) || p.ab() == p.ba()) {
    throw PreconditionError("rank bounds need f(a,a), f(b,b) and f(a,b)-f(b,a) all nonzero");
  }
  const F mu2 = mu_squared(p);
  SpectralReport r;
  r.m = g.left_size();
  r.n = g.right_size();
  r.mu_squared = simplify(ExactScalar(mu2));
  r.nu = bigraph_multiplicity(g, mu2);
  r.exact_rank = rank(matrix_from_bigraph(p, g));
  fill_bounds(r);
  return r;
}

/// K_{n,n} minus a perfect matching: B = J - I.
inline BipartiteGraph complete_minus_matching(std::size_t n) {
  if (n == 0) throw PreconditionError("complete_minus_matching needs n >= 1");
  BipartiteGraph g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) g.set_edge(i, j, true);
  return g;
}

enum class RootSign { Plus, Minus };

/// beta with mu(f_theta; 1, beta) = 1 together with the matrix on
/// K_{n,n} minus a perfect matching; rank <= n + 3.
struct Theorem2Instance {
  Rational theta;
  std::size_t n = 0;
  RootSign sign = RootSign::Plus;
  ExactScalar beta;
  std::variant<Matrix<Rational>, Matrix<QuadExt>> matrix;
  SpectralReport report;
};

/// Roots of x^2 - (2 + (1/theta - 1)^2) x + 1.
inline QuadraticRoots unit_mu_betas(const Rational& theta) {
  if (theta.sign() <= 0 || theta >= Rational(1)) {
    throw PreconditionError("theta must lie in (0, 1), got " + theta.to_string());
  }
  const Rational s = theta.inverse() - Rational(1);
  return solve_quadratic_monic(-(Rational(2) + s * s), Rational(1));
}

inline Theorem2Instance theorem2_instance(const Rational& theta, std::size_t n, RootSign sign) {
  if (n == 0) throw PreconditionError("n must be >= 1");
  const auto roots = unit_mu_betas(theta);
  Theorem2Instance out;
  out.theta = theta;
  out.n = n;
  out.sign = sign;
  out.beta = sign == RootSign::Plus ? roots.plus : roots.minus;
  const auto g = complete_minus_matching(n);
  std::visit(
      [&](const auto& beta) {
        using F = std::decay_t<decltype(beta)>;
        const auto pair = TwoValuePair<F>::linear(theta, F(1), beta);
        out.report = rank_sandwich(pair, g);
        out.matrix = matrix_from_bigraph(pair, g);
      },
      out.beta);
  return out;
}

struct RowlinsonReport {
  bool applicable = false;
  std::string reason;  // why the bounds do not apply, empty otherwise
  std::size_t nu = 0;
  std::size_t order = 0;
  std::size_t max_degree = 0;
  bool bound_a_holds = false;     // nu <= order - 1 - d
  bool bound_b_applicable = false;  // equality in (a)
  bool bound_b_holds = false;     // nu <= d - 1
};

/// Checks Rowlinson's inequalities for the eigenvalue +sqrt(mu2) of g.
/// Because only mu^2 is known, mu2 = 1 could stand for the excluded
/// eigenvalue -1; it is accepted only when `positive_root` is set.
inline RowlinsonReport rowlinson_check(const BipartiteGraph& g, const Rational& mu2,
                                       bool positive_root = false) {
  RowlinsonReport r;
  r.order = g.order();
  r.max_degree = g.max_degree();
  if (mu2.sign() <= 0) {
    r.reason = "mu^2 must be positive (mu real and nonzero)";
    return r;
  }
  r.nu = bigraph_multiplicity(g, mu2);
  if (mu2 == Rational(1) && !positive_root) {
    r.reason = "mu^2 = 1 is ambiguous with the excluded eigenvalue -1";
  } else if (r.order <= 5) {
    r.reason = "graph order must exceed 5";
  } else if (!g.is_connected()) {
    r.reason = "graph is disconnected";
  } else if (r.nu <= 1) {
    r.reason = "multiplicity must exceed 1";
  }
  if (!r.reason.empty()) return r;
  r.applicable = true;
  const long bound_a = static_cast<long>(r.order) - 1 - static_cast<long>(r.max_degree);
  const long nu = static_cast<long>(r.nu);
  r.bound_a_holds = nu <= bound_a;
  r.bound_b_applicable = nu == bound_a;
  r.bound_b_holds = !r.bound_b_applicable || nu <= static_cast<long>(r.max_degree) - 1;
  return r;
}

}  // namespace symrank
