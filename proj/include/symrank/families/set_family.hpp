#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symrank/ensemble/bigraph.hpp"
#include "symrank/ensemble/ensemble.hpp"
#include "symrank/error.hpp"
#include "symrank/exactfield/rational.hpp"
#include "symrank/linalg/matrix.hpp"

namespace symrank {

/// Subset of [n] (n <= 64) as a bitmask; element e occupies bit e - 1.
using SetMask = std::uint64_t;

inline constexpr std::size_t kMaxGround = 64;

inline SetMask mask_of(const std::vector<std::size_t>& elements) {
  SetMask m = 0;
  for (std::size_t e : elements) {
    if (e < 1 || e > kMaxGround) throw PreconditionError("set element out of range");
    m |= SetMask{1} << (e - 1);
  }
  return m;
}

inline std::vector<std::size_t> elements_of(SetMask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return out;
}

inline std::size_t set_size(SetMask m) { return static_cast<std::size_t>(std::popcount(m)); }

/// Sets are compared by size first, then lexicographically as sorted
/// element lists.
inline bool size_lex_less(SetMask a, SetMask b) {
  if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
  return elements_of(a) < elements_of(b);
}

/// A family of distinct nonempty subsets of [ground_n].
class SetFamily {
 public:
  SetFamily() = default;

  SetFamily(std::size_t ground_n, std::vector<SetMask> sets)
      : ground_n_(ground_n), sets_(std::move(sets)) {
    if (ground_n_ > kMaxGround) throw PreconditionError("ground set larger than 64 elements");
    const SetMask universe = ground_n_ == 64 ? ~SetMask{0} : (SetMask{1} << ground_n_) - 1;
    for (SetMask s : sets_) {
      if (s == 0) throw PreconditionError("family contains the empty set");
      if ((s & ~universe) != 0) throw PreconditionError("set element outside the ground set");
    }
    auto sorted = sets_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PreconditionError("family contains a repeated set");
    }
  }

  static SetFamily from_lists(std::size_t ground_n,
                              const std::vector<std::vector<std::size_t>>& lists) {
    std::vector<SetMask> sets;
    sets.reserve(lists.size());
    for (const auto& l : lists) {
      for (std::size_t e : l)
        if (e < 1 || e > ground_n) throw PreconditionError("set element outside the ground set");
      sets.push_back(mask_of(l));
    }
    return SetFamily(ground_n, std::move(sets));
  }

  [[nodiscard]] std::size_t ground_size() const { return ground_n_; }
  [[nodiscard]] std::size_t size() const { return sets_.size(); }
  [[nodiscard]] const std::vector<SetMask>& sets() const { return sets_; }
  [[nodiscard]] SetMask operator[](std::size_t i) const { return sets_[i]; }

  [[nodiscard]] bool contains(SetMask s) const {
    return std::find(sets_.begin(), sets_.end(), s) != sets_.end();
  }

  /// Same sets ordered by size, then lexicographically.
  [[nodiscard]] SetFamily sorted() const {
    auto s = sets_;
    std::sort(s.begin(), s.end(), size_lex_less);
    return SetFamily(ground_n_, std::move(s));
  }

  [[nodiscard]] std::vector<std::size_t> distinct_sizes() const {
    std::vector<std::size_t> out;
    for (SetMask s : sets_) out.push_back(set_size(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Same sets as an unordered collection.
  [[nodiscard]] bool same_sets(const SetFamily& o) const {
    auto a = sets_;
    auto b = o.sets_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return ground_n_ == o.ground_n_ && a == b;
  }

 private:
  std::size_t ground_n_ = 0;
  std::vector<SetMask> sets_;
};

/// |A & B| == theta |A| or |A & B| == theta |B|, exactly.
inline bool theta_compatible(SetMask a, SetMask b, const Rational& theta) {
  const long inter = std::popcount(a & b);
  const Rational i(inter);
  return i == theta * Rational(static_cast<long>(set_size(a))) ||
         i == theta * Rational(static_cast<long>(set_size(b)));
}

/// Fast path for theta = 1/2.
inline bool bisection_compatible(SetMask a, SetMask b) {
  const int twice = 2 * std::popcount(a & b);
  return twice == std::popcount(a) || twice == std::popcount(b);
}

struct ThetaCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> violation;  // first failing index pair
};

inline ThetaCheck is_theta_intersecting(const SetFamily& f, const Rational& theta) {
  if (theta.sign() <= 0 || theta >= Rational(1)) throw PreconditionError("theta must lie in (0, 1)");
  ThetaCheck r;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!theta_compatible(f[i], f[j], theta)) {
        r.ok = false;
        r.violation = std::pair{i, j};
        return r;
      }
  return r;
}

/// M_F: entry (i, j) is f_theta(|A_i|, |A_j|) if |A_i & A_j| = theta |A_j|,
/// otherwise f_theta(|A_j|, |A_i|).
inline Matrix<Rational> family_matrix(const SetFamily& f, const Rational& theta) {
  const auto check = is_theta_intersecting(f, theta);
  if (!check.ok) throw PreconditionError("family is not theta-intersecting");
  const auto ft = PairFunction<Rational>::linear(theta);
  const std::size_t m = f.size();
  Matrix<Rational> out(m, m, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Rational si(static_cast<long>(set_size(f[i])));
      const Rational sj(static_cast<long>(set_size(f[j])));
      const Rational inter(static_cast<long>(std::popcount(f[i] & f[j])));
      const Rational v = inter == theta * sj ? ft(si, sj) : ft(sj, si);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

/// (n + 1) / c: the family-size bound implied by rank(M_F) >= c |F|.
inline Rational rank_to_size_bound(const Rational& c, std::size_t n) {
  if (c.sign() <= 0) throw PreconditionError("c must be positive");
  if (c > Rational(1)) throw PreconditionError("c must be at most 1");
  return Rational(static_cast<long>(n) + 1) / c;
}

/// Pair and bipartite graph of a family with exactly two set sizes. The
/// sets of size `alpha_size` form the first part (alpha = that size); by
/// default the smaller size.
struct FamilyGraph {
  TwoValuePair<Rational> pair;
  BipartiteGraph graph;
};

inline FamilyGraph family_bigraph(const SetFamily& f, const Rational& theta,
                                  std::size_t alpha_size = 0) {
  const auto sizes = f.distinct_sizes();
  if (sizes.size() != 2) throw PreconditionError("family must have exactly two set sizes");
  if (alpha_size == 0) alpha_size = sizes[0];
  if (alpha_size != sizes[0] && alpha_size != sizes[1]) {
    throw PreconditionError("alpha_size is not a set size of the family");
  }
  const std::size_t beta_size = alpha_size == sizes[0] ? sizes[1] : sizes[0];
  std::vector<SetMask> ordered;
  for (std::size_t want : {alpha_size, beta_size}) {
    std::vector<SetMask> part;
    for (SetMask s : f.sets())
      if (set_size(s) == want) part.push_back(s);
    std::sort(part.begin(), part.end(), size_lex_less);
    ordered.insert(ordered.end(), part.begin(), part.end());
  }
  std::size_t m = 0;
  while (m < ordered.size() && set_size(ordered[m]) == alpha_size) ++m;
  const SetFamily s(f.ground_size(), std::move(ordered));
  const auto mat = family_matrix(s, theta);
  auto pair = TwoValuePair<Rational>::linear(theta, Rational(static_cast<long>(alpha_size)),
                                             Rational(static_cast<long>(beta_size)));
  auto g = bigraph_from_matrix(mat, pair, m, s.size() - m);
  return {std::move(pair), std::move(g)};
}

}  // namespace symrank
