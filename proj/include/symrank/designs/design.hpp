#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "symrank/designs/hadamard.hpp"
#include "symrank/ensemble/bigraph.hpp"
#include "symrank/ensemble/pair_function.hpp"
#include "symrank/error.hpp"
#include "symrank/spectra/spectra.hpp"

namespace symrank {

/// Symmetric 2-(v, k, lambda) design. incidence(b, p) = 1 iff block b
/// contains point p; blocks and points are numbered 0..v-1.
class SymmetricDesign {
 public:
  SymmetricDesign(std::size_t v, std::size_t k, std::size_t lambda,
                  std::vector<std::uint8_t> incidence)
      : v_(v), k_(k), lambda_(lambda), incidence_(std::move(incidence)) {
    validate();
  }

  /// From block lists (0-based points); parameters are inferred and checked.
  static SymmetricDesign from_blocks(std::size_t v, const std::vector<std::vector<std::size_t>>& blocks) {
    if (blocks.size() != v) throw ConstructionFailed("a symmetric design has v blocks");
    if (v < 2) throw ConstructionFailed("design needs at least two points");
    std::vector<std::uint8_t> inc(v * v, 0);
    for (std::size_t b = 0; b < v; ++b)
      for (std::size_t p : blocks[b]) {
        if (p >= v) throw ConstructionFailed("block point out of range");
        inc[b * v + p] = 1;
      }
    const std::size_t k = blocks[0].size();
    std::size_t lambda = 0;
    for (std::size_t p = 0; p < v; ++p) lambda += inc[p] & inc[v + p];
    return SymmetricDesign(v, k, lambda, std::move(inc));
  }

  [[nodiscard]] std::size_t v() const { return v_; }
  [[nodiscard]] std::size_t k() const { return k_; }
  [[nodiscard]] std::size_t lambda() const { return lambda_; }
  [[nodiscard]] bool incident(std::size_t block, std::size_t point) const {
    return incidence_[block * v_ + point] != 0;
  }

  [[nodiscard]] std::vector<std::vector<std::size_t>> blocks() const {
    std::vector<std::vector<std::size_t>> out(v_);
    for (std::size_t b = 0; b < v_; ++b)
      for (std::size_t p = 0; p < v_; ++p)
        if (incident(b, p)) out[b].push_back(p);
    return out;
  }

  friend bool operator==(const SymmetricDesign&, const SymmetricDesign&) = default;

 private:
  void validate() const {
    const auto fail = [&](const std::string& why) {
      throw ConstructionFailed("not a symmetric 2-(" + std::to_string(v_) + "," +
                               std::to_string(k_) + "," + std::to_string(lambda_) +
                               ") design: " + why);
    };
    if (incidence_.size() != v_ * v_) fail("incidence matrix has the wrong size");
    if (lambda_ * (v_ - 1) != k_ * (k_ - 1)) fail("lambda (v - 1) != k (k - 1)");
    for (std::size_t i = 0; i < v_; ++i) {
      std::size_t row = 0;
      std::size_t col = 0;
      for (std::size_t j = 0; j < v_; ++j) {
        row += incidence_[i * v_ + j];
        col += incidence_[j * v_ + i];
      }
      if (row != k_ || col != k_) fail("row or column sum differs from k");
    }
    for (std::size_t a = 0; a < v_; ++a)
      for (std::size_t b = a + 1; b < v_; ++b) {
        std::size_t rows = 0;
        std::size_t cols = 0;
        for (std::size_t j = 0; j < v_; ++j) {
          rows += incidence_[a * v_ + j] & incidence_[b * v_ + j];
          cols += incidence_[j * v_ + a] & incidence_[j * v_ + b];
        }
        if (rows != lambda_ || cols != lambda_) fail("two blocks or two points meet != lambda times");
      }
  }

  std::size_t v_;
  std::size_t k_;
  std::size_t lambda_;
  std::vector<std::uint8_t> incidence_;
};

/// The 2-(4t-1, 2t-1, t-1) design of a normalized Hadamard matrix of order
/// 4t: drop the first row and column and keep the +1 positions.
inline SymmetricDesign hadamard_design(const HadamardMatrix& h) {
  if (!h.is_normalized()) throw PreconditionError("Hadamard design needs a normalized matrix");
  const std::size_t n = h.order();
  if (n % 4 != 0 || n < 8) {
    throw PreconditionError("Hadamard design needs order 4t with t >= 2, got " + std::to_string(n));
  }
  const std::size_t v = n - 1;
  const std::size_t t = n / 4;
  std::vector<std::uint8_t> inc(v * v, 0);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) inc[i * v + j] = h(i + 1, j + 1) == 1 ? 1 : 0;
  return SymmetricDesign(v, 2 * t - 1, t - 1, std::move(inc));
}

/// PG(2,2): lines {i, i+1, i+3} mod 7.
inline SymmetricDesign fano() {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < 7; ++i) blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return SymmetricDesign::from_blocks(7, blocks);
}

/// Blocks replaced by their complements: 2-(v, v-k, v-2k+lambda).
inline SymmetricDesign complement_design(const SymmetricDesign& d) {
  const std::size_t v = d.v();
  if (d.k() >= v || v + d.lambda() < 2 * d.k()) {
    throw ConstructionFailed("complement design parameters are invalid");
  }
  std::vector<std::uint8_t> inc(v * v, 0);
  for (std::size_t b = 0; b < v; ++b)
    for (std::size_t p = 0; p < v; ++p) inc[b * v + p] = d.incident(b, p) ? 0 : 1;
  return SymmetricDesign(v, v - d.k(), v + d.lambda() - 2 * d.k(), std::move(inc));
}

/// Point-block incidence graph: v_b ~ w_p iff block b contains point p.
inline BipartiteGraph incidence_bigraph(const SymmetricDesign& d) {
  BipartiteGraph g(d.v(), d.v());
  for (std::size_t b = 0; b < d.v(); ++b)
    for (std::size_t p = 0; p < d.v(); ++p)
      if (d.incident(b, p)) g.set_edge(b, p, true);
  return g;
}

/// Rank bounds of the design matrix M_Delta for a pair; low rank requires
/// mu^2 = k - lambda.
template <class F>
SpectralReport design_rank_instance(const SymmetricDesign& d, const TwoValuePair<F>& p) {
  return rank_sandwich(p, incidence_bigraph(d));
}

struct OneByTwoSolution {
  std::uint64_t alpha;
  std::uint64_t beta;
  friend bool operator==(const OneByTwoSolution&, const OneByTwoSolution&) = default;
};

inline constexpr std::uint64_t kMaxScanBound = 200'000;

/// Coprime alpha < beta <= bound with alpha*beta = target * (alpha-beta)^2.
/// Exhaustive over all pairs; alpha values are split across threads.
inline std::vector<OneByTwoSolution> onebytwo_scan(std::uint64_t target, std::uint64_t bound,
                                                   std::size_t threads = 1) {
  if (target < 1) throw PreconditionError("k - lambda must be >= 1");
  if (bound < 2) throw PreconditionError("bound must be >= 2");
  if (bound > kMaxScanBound) throw UnsupportedParameter("bound too large for exhaustive scan");
  threads = std::max<std::size_t>(1, threads);
  const auto t = static_cast<unsigned __int128>(target);
  std::vector<std::vector<OneByTwoSolution>> found(threads);
  auto work = [&](std::size_t id) {
    for (std::uint64_t a = 1 + id; a < bound; a += threads)
      for (std::uint64_t b = a + 1; b <= bound; ++b) {
        const auto diff = static_cast<unsigned __int128>(b - a);
        if (static_cast<unsigned __int128>(a) * b != t * diff * diff) continue;
        if (std::gcd(a, b) == 1) found[id].push_back({a, b});
      }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t id = 0; id < threads; ++id) pool.emplace_back(work, id);
  }
  std::vector<OneByTwoSolution> out;
  for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(x.alpha, x.beta) < std::pair(y.alpha, y.beta);
  });
  return out;
}

}  // namespace symrank
