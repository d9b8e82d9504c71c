#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "symrank/designs/hadamard.hpp"
#include "symrank/error.hpp"
#include "symrank/families/clique.hpp"
#include "symrank/families/set_family.hpp"

namespace symrank {

/// Two sunflowers over [n]: {1,k} for k = 2..n and {1,2,2j+1,2j+2} for
/// j = 1..n/2-1. Size 3n/2 - 2.
inline SetFamily sunflower_family(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("sunflower family needs an even n >= 4");
  if (n > kMaxGround) throw PreconditionError("ground set larger than 64 elements");
  std::vector<std::vector<std::size_t>> lists;
  for (std::size_t k = 2; k <= n; ++k) lists.push_back({1, k});
  for (std::size_t j = 1; j <= n / 2 - 1; ++j) lists.push_back({1, 2, 2 * j + 1, 2 * j + 2});
  return SetFamily::from_lists(n, lists);
}

/// The 14-set bisection-closed family over [8] obtained from the sunflower
/// family by adding 1357, 1368, 1458, 1467.
inline SetFamily fano_family() {
  const SetFamily base = sunflower_family(8);
  std::vector<std::vector<std::size_t>> lists;
  for (SetMask s : base.sets()) lists.push_back(elements_of(s));
  lists.push_back({1, 3, 5, 7});
  lists.push_back({1, 3, 6, 8});
  lists.push_back({1, 4, 5, 8});
  lists.push_back({1, 4, 6, 7});
  return SetFamily::from_lists(8, lists);
}

namespace detail {

inline SetMask plus_support(const HadamardMatrix& h, std::size_t row) {
  SetMask m = 0;
  for (std::size_t j = 0; j < h.order(); ++j)
    if (h(row, j) == 1) m |= SetMask{1} << j;
  return m;
}

// Largest clique (up to `want`) of pairwise bisection-compatible sets among
// `pool`, each also compatible with every set of `core`. Returns the chosen
// sets.
inline std::vector<SetMask> compatible_clique(const std::vector<SetMask>& pool, std::size_t want,
                                              const std::vector<SetMask>& core = {}) {
  std::vector<SetMask> usable;
  for (SetMask s : pool) {
    bool ok = std::find(core.begin(), core.end(), s) == core.end();
    for (SetMask c : core) ok = ok && bisection_compatible(s, c);
    if (ok) usable.push_back(s);
  }
  BitGraph g(usable.size());
  for (std::size_t a = 0; a < usable.size(); ++a)
    for (std::size_t b = a + 1; b < usable.size(); ++b)
      if (bisection_compatible(usable[a], usable[b])) g.add_edge(a, b);
  MaxClique solver(g, MaxClique::Clock::now() + std::chrono::seconds(30), want);
  const auto res = solver.solve();
  std::vector<SetMask> out;
  for (std::size_t v : res.vertices) out.push_back(usable[v]);
  if (out.size() > want) out.resize(want);
  return out;
}

// Distinct sets R_2 & R_i over the large rows, if they are pairwise
// compatible and compatible with the large sets; empty otherwise.
inline std::vector<SetMask> row_two_core(SetMask r2, const std::vector<SetMask>& large,
                                         std::size_t size) {
  std::vector<SetMask> core;
  for (SetMask l : large) {
    const SetMask s = r2 & l;
    if (s == r2 || set_size(s) != size) continue;
    if (std::find(core.begin(), core.end(), s) == core.end()) core.push_back(s);
  }
  for (std::size_t a = 0; a < core.size(); ++a) {
    for (SetMask l : large)
      if (l == core[a] || !bisection_compatible(core[a], l)) return {};
    for (std::size_t b = a + 1; b < core.size(); ++b)
      if (!bisection_compatible(core[a], core[b])) return {};
  }
  std::sort(core.begin(), core.end(), size_lex_less);
  return core;
}

// Sets of size `size` formed as R_i & R_j or R_i \ R_j from row supports,
// compatible with every set of `large`.
inline std::vector<SetMask> intersection_pool(const std::vector<SetMask>& rows, std::size_t size,
                                              const std::vector<SetMask>& large) {
  std::vector<SetMask> pool;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (i == j) continue;
      for (SetMask s : {rows[i] & rows[j], rows[i] & ~rows[j]}) {
        if (set_size(s) != size) continue;
        if (std::find(pool.begin(), pool.end(), s) != pool.end()) continue;
        if (std::find(large.begin(), large.end(), s) != large.end()) continue;
        bool ok = true;
        for (SetMask l : large) ok = ok && bisection_compatible(s, l);
        if (ok) pool.push_back(s);
      }
    }
  std::sort(pool.begin(), pool.end(), size_lex_less);
  return pool;
}

// Every `size`-subset of [n] compatible with all of `large` (small n only).
inline std::vector<SetMask> exhaustive_pool(std::size_t n, std::size_t size,
                                            const std::vector<SetMask>& large) {
  std::vector<SetMask> pool;
  const SetMask limit = SetMask{1} << n;
  for (SetMask s = 1; s < limit; ++s) {
    if (set_size(s) != size) continue;
    bool ok = true;
    for (SetMask l : large) ok = ok && s != l && bisection_compatible(s, l);
    if (ok) pool.push_back(s);
  }
  std::sort(pool.begin(), pool.end(), size_lex_less);
  return pool;
}

}  // namespace detail

/// Bisection-closed family of size 3n/2 - 2 over [n] from a Hadamard matrix
/// of order n (n divisible by 8).
///
/// Large sets are +1 supports of rows of the normalized matrix (size n/2);
/// small sets of size n/4 start from the intersections with the row-2
/// support and are completed from pairwise intersections and differences of
/// the supports (all n/4-subsets for n <= 24 as a last resort). The first
/// attempt uses rows 3..n with n/2 small sets; if no completion exists, rows
/// 2..n are used with n/2 - 1 small sets.
/// The result is verified before it is returned.
inline SetFamily hadamard_family(const HadamardMatrix& h) {
  if (!h.is_normalized()) throw PreconditionError("hadamard_family needs a normalized matrix");
  const std::size_t n = h.order();
  if (n % 8 != 0) throw PreconditionError("hadamard_family needs an order divisible by 8");
  if (n > kMaxGround) throw PreconditionError("ground set larger than 64 elements");
  std::vector<SetMask> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(detail::plus_support(h, i));

  struct Profile {
    std::size_t skip;  // number of leading rows (after the first) left out
    std::size_t small;
  };
  for (const Profile p : {Profile{1, n / 2}, Profile{0, n / 2 - 1}}) {
    std::vector<SetMask> large(rows.begin() + static_cast<std::ptrdiff_t>(p.skip), rows.end());
    const auto pool = detail::intersection_pool(rows, n / 4, large);
    std::vector<SetMask> small;
    // Seeded completion: the row-2 intersections, topped up from the pool.
    auto core = detail::row_two_core(rows[0], large, n / 4);
    if (!core.empty() && core.size() <= p.small) {
      auto rest = detail::compatible_clique(pool, p.small - core.size(), core);
      if (core.size() + rest.size() == p.small) {
        small = core;
        small.insert(small.end(), rest.begin(), rest.end());
      }
    }
    if (small.size() < p.small) small = detail::compatible_clique(pool, p.small);
    if (small.size() < p.small && n <= 24) {
      small = detail::compatible_clique(detail::exhaustive_pool(n, n / 4, large), p.small);
    }
    if (small.size() < p.small) continue;
    std::vector<SetMask> sets = large;
    sets.insert(sets.end(), small.begin(), small.end());
    SetFamily f(n, std::move(sets));
    if (!is_theta_intersecting(f, Rational::reduce(1, 2)).ok) continue;
    return f;
  }
  throw ConstructionFailed("no verified Hadamard family for order " + std::to_string(n));
}

}  // namespace symrank
