#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "symrank/error.hpp"

namespace symrank {

/// Complete orientation of K_n on vertices 0..n-1. For each pair i < j one
/// bit records whether i -> j.
class Tournament {
 public:
  Tournament() = default;

  /// All pairs oriented i -> j for i < j (the transitive tournament).
  explicit Tournament(std::size_t n) : n_(n), forward_(n * (n > 0 ? n - 1 : 0) / 2, 1) {}

  [[nodiscard]] std::size_t size() const { return n_; }

  /// True iff i -> j. Requires i != j.
  [[nodiscard]] bool beats(std::size_t i, std::size_t j) const {
    check(i, j);
    return i < j ? forward_[index(i, j)] != 0 : forward_[index(j, i)] == 0;
  }

  /// Orients the pair so that from -> to.
  void orient(std::size_t from, std::size_t to) {
    check(from, to);
    if (from < to) {
      forward_[index(from, to)] = 1;
    } else {
      forward_[index(to, from)] = 0;
    }
  }

  /// Arcs as (from, to) pairs, ordered by the underlying pair (i < j).
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(forward_.size());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        out.emplace_back(beats(i, j) ? std::pair{i, j} : std::pair{j, i});
    return out;
  }

  /// Builds a tournament from an arc list; every pair must appear exactly once.
  static Tournament from_arcs(std::size_t n,
                              const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    Tournament t(n);
    std::vector<std::uint8_t> seen(t.forward_.size(), 0);
    for (auto [from, to] : arcs) {
      t.check(from, to);
      auto& s = seen[t.index(std::min(from, to), std::max(from, to))];
      if (s != 0) throw PreconditionError("pair oriented twice");
      s = 1;
      t.orient(from, to);
    }
    for (auto s : seen)
      if (s == 0) throw PreconditionError("tournament is missing an arc");
    return t;
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const {
    // row-major upper triangle, i < j
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }
  void check(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_ || i == j) throw PreconditionError("invalid tournament pair");
  }

  std::size_t n_ = 0;
  std::vector<std::uint8_t> forward_;
};

/// SplitMix64 finalizer; derives independent child seeds from (seed, index).
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniformly random tournament: each pair i < j gets an independent fair
/// coin from a 64-bit Mersenne Twister seeded with `seed`.
inline Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("tournament needs n >= 1");
  std::mt19937_64 engine(seed);
  Tournament t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // top bit of the raw engine output; distribution objects are avoided
      // so the output does not depend on the standard library
      if ((engine() >> 63) == 0) t.orient(j, i);
    }
  return t;
}

}  // namespace symrank
