#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "symrank/error.hpp"
#include "symrank/families/clique.hpp"
#include "symrank/families/set_family.hpp"

namespace symrank {

struct SearchOptions {
  std::chrono::milliseconds time_budget{60'000};
  std::size_t max_set_size = 0;  // 0: no limit
  std::size_t max_drop = 3;      // largest number of seed members removed at once
  std::size_t threads = 1;
};

struct SearchResult {
  SetFamily family;
  std::size_t improvements = 0;
  std::uint64_t clique_nodes = 0;
  bool budget_exhausted = false;  // the deadline stopped the search
};

namespace detail {

// Even-sized nonempty subsets of [n] up to max_size, ordered by size then
// lexicographically.
inline std::vector<SetMask> even_candidates(std::size_t n, std::size_t max_size) {
  std::vector<SetMask> out;
  const SetMask limit = SetMask{1} << n;
  for (SetMask s = 1; s < limit; ++s) {
    const std::size_t k = set_size(s);
    if (k % 2 == 0 && k <= max_size) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

// Next r-combination of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t r = c.size();
  for (std::size_t i = r; i-- > 0;) {
    if (c[i] < n - r + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct DropOutcome {
  std::vector<SetMask> family;  // empty when no improvement
  std::uint64_t nodes = 0;
  bool cut = false;
};

// Removes the sets at `drop` from `current`, then finds the largest set of
// candidates compatible with the remaining core and with each other.
inline DropOutcome try_drop(const std::vector<SetMask>& current,
                            const std::vector<std::size_t>& drop,
                            const std::vector<SetMask>& universe,
                            MaxClique::Clock::time_point deadline,
                            const std::atomic<bool>* cancel) {
  std::vector<SetMask> core;
  for (std::size_t i = 0, d = 0; i < current.size(); ++i) {
    if (d < drop.size() && drop[d] == i) {
      ++d;
      continue;
    }
    core.push_back(current[i]);
  }
  std::vector<SetMask> pool;
  for (SetMask c : universe) {
    bool ok = true;
    for (SetMask s : core) {
      if (s == c || !bisection_compatible(s, c)) {
        ok = false;
        break;
      }
    }
    if (ok) pool.push_back(c);
  }
  DropOutcome out;
  if (pool.size() <= drop.size()) return out;
  BitGraph g(pool.size());
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = a + 1; b < pool.size(); ++b)
      if (bisection_compatible(pool[a], pool[b])) g.add_edge(a, b);
  MaxClique solver(g, deadline, 0, cancel);
  const auto res = solver.solve(drop.size());
  out.nodes = res.nodes;
  out.cut = !res.complete;
  if (res.vertices.size() > drop.size()) {
    out.family = core;
    for (std::size_t v : res.vertices) out.family.push_back(pool[v]);
  }
  return out;
}

}  // namespace detail

/// Improves a bisection-closed seed family over [n].
///
/// Local search: for r = 0, 1, ..., max_drop, each r-subset of the current
/// family (lexicographic order) is removed and the remaining core is
/// extended by a maximum set of mutually compatible even-sized candidates,
/// found by exact branch and bound. The first strict improvement is kept and
/// the search restarts at r = 0. With r = 0 this is plain extension of the
/// seed. The search ends at a local optimum or at the deadline. Candidate
/// order is by size then lexicographic. Worker threads evaluate disjoint
/// slices of a batch and the lowest-index improvement wins, so the output
/// does not depend on the thread count unless the deadline is hit.
inline SearchResult search_bisection_closed(std::size_t n, const SetFamily& seed,
                                            const SearchOptions& opts = {}) {
  if (n > 20) throw PreconditionError("search is limited to n <= 20");
  if (seed.ground_size() > n) throw PreconditionError("seed lives on a larger ground set");
  const Rational half = Rational::reduce(1, 2);
  if (!is_theta_intersecting(seed, half).ok) {
    throw PreconditionError("seed family is not bisection-closed");
  }
  const auto deadline = MaxClique::Clock::now() + opts.time_budget;
  const std::size_t max_size = opts.max_set_size == 0 ? n : std::min(opts.max_set_size, n);
  const auto universe = detail::even_candidates(n, max_size);
  const std::size_t threads = std::max<std::size_t>(1, opts.threads);

  std::vector<SetMask> current = seed.sets();
  SearchResult result;
  std::atomic<bool> cancel{false};

  bool improved = true;
  while (improved && !result.budget_exhausted) {
    improved = false;
    for (std::size_t r = 0; r <= std::min(opts.max_drop, current.size()) && !improved; ++r) {
      std::vector<std::size_t> combo(r);
      for (std::size_t i = 0; i < r; ++i) combo[i] = i;
      bool more = true;
      while (more && !improved) {
        // Gather one batch of drop sets.
        std::vector<std::vector<std::size_t>> batch;
        while (more && batch.size() < 4 * threads) {
          batch.push_back(combo);
          more = r > 0 && detail::next_combination(combo, current.size());
        }
        std::vector<detail::DropOutcome> outcomes(batch.size());
        auto work = [&](std::size_t t) {
          for (std::size_t i = t; i < batch.size(); i += threads)
            outcomes[i] = detail::try_drop(current, batch[i], universe, deadline, &cancel);
        };
        if (threads == 1) {
          work(0);
        } else {
          std::vector<std::jthread> pool;
          for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
        }
        for (auto& o : outcomes) {
          result.clique_nodes += o.nodes;
          if (o.cut) result.budget_exhausted = true;
        }
        for (auto& o : outcomes) {
          if (!o.family.empty()) {
            current = std::move(o.family);
            ++result.improvements;
            improved = true;
            break;
          }
        }
        if (MaxClique::Clock::now() >= deadline) result.budget_exhausted = true;
        if (result.budget_exhausted) break;
      }
      if (result.budget_exhausted) break;
    }
  }
  result.family = SetFamily(n, current).sorted();
  if (!is_theta_intersecting(result.family, half).ok) {
    throw ConstructionFailed("search produced an invalid family");
  }
  return result;
}

}  // namespace symrank
