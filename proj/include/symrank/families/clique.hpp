#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace symrank {

/// Dense undirected graph as adjacency bitsets, for maximum clique search.
class BitGraph {
 public:
  explicit BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), adj_(n * words_, 0) {}

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::size_t words() const { return words_; }

  void add_edge(std::size_t u, std::size_t v) {
    adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const {
    return (adj_[u * words_ + v / 64] >> (v % 64) & 1U) != 0;
  }

  [[nodiscard]] const std::uint64_t* row(std::size_t u) const { return adj_.data() + u * words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
};

struct CliqueResult {
  std::vector<std::size_t> vertices;  // ascending
  bool complete = true;               // false if the deadline cut the search
  std::uint64_t nodes = 0;
};

/// Branch and bound maximum clique with a greedy colouring bound (the MCQ
/// scheme). Colour classes are built in vertex-index order, so the search
/// is deterministic for a given numbering. Stops early once `target` vertices are
/// found (0 means no target) or at the deadline; `cancel` is polled too.
class MaxClique {
 public:
  using Clock = std::chrono::steady_clock;

  MaxClique(const BitGraph& g, Clock::time_point deadline, std::size_t target = 0,
            const std::atomic<bool>* cancel = nullptr)
      : g_(g), deadline_(deadline), target_(target), cancel_(cancel) {}

  /// `lower` is a size the caller already has; only strictly larger cliques
  /// are recorded.
  CliqueResult solve(std::size_t lower = 0) {
    best_size_ = lower;
    std::vector<std::uint64_t> cand(g_.words(), 0);
    for (std::size_t v = 0; v < g_.size(); ++v) cand[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> current;
    expand(current, cand);
    std::sort(result_.vertices.begin(), result_.vertices.end());
    result_.complete = !stopped_;
    return result_;
  }

 private:
  bool out_of_time() {
    if ((++result_.nodes & 0x3ff) != 0) return stopped_;
    if (Clock::now() >= deadline_ || (cancel_ != nullptr && cancel_->load())) stopped_ = true;
    return stopped_;
  }

  // Greedy sequential colouring of `cand`; order[i] gets colour bound[i].
  void colour(const std::vector<std::uint64_t>& cand, std::vector<std::size_t>& order,
              std::vector<std::size_t>& bound) const {
    std::vector<std::uint64_t> uncoloured = cand;
    std::size_t colour_id = 0;
    const std::size_t w = g_.words();
    std::vector<std::uint64_t> q(w);
    for (;;) {
      bool any = false;
      for (auto x : uncoloured) any = any || x != 0;
      if (!any) break;
      ++colour_id;
      q = uncoloured;
      for (std::size_t k = 0; k < w; ++k) {
        while (q[k] != 0) {
          const std::size_t v = k * 64 + static_cast<std::size_t>(std::countr_zero(q[k]));
          q[k] &= q[k] - 1;
          uncoloured[v / 64] &= ~(std::uint64_t{1} << (v % 64));
          const std::uint64_t* nb = g_.row(v);
          for (std::size_t t = 0; t < w; ++t) q[t] &= ~nb[t];
          order.push_back(v);
          bound.push_back(colour_id);
        }
      }
    }
  }

  void expand(std::vector<std::size_t>& current, std::vector<std::uint64_t>& cand) {
    if (out_of_time()) return;
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    colour(cand, order, bound);
    if (order.empty()) {
      if (current.size() > best_size_) {
        best_size_ = current.size();
        result_.vertices = current;
      }
      return;
    }
    const std::size_t w = g_.words();
    std::vector<std::uint64_t> next(w);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + bound[idx] <= best_size_) return;
      if (target_ != 0 && best_size_ >= target_) return;
      const std::size_t v = order[idx];
      const std::uint64_t* nb = g_.row(v);
      for (std::size_t t = 0; t < w; ++t) next[t] = cand[t] & nb[t];
      current.push_back(v);
      bool empty = true;
      for (auto x : next) empty = empty && x == 0;
      if (empty) {
        if (current.size() > best_size_) {
          best_size_ = current.size();
          result_.vertices = current;
        }
      } else {
        auto copy = next;
        expand(current, copy);
      }
      current.pop_back();
      cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
      if (stopped_) return;
    }
  }

  const BitGraph& g_;
  Clock::time_point deadline_;
  std::size_t target_;
  const std::atomic<bool>* cancel_;
  std::size_t best_size_ = 0;
  bool stopped_ = false;
  CliqueResult result_;
};

}  // namespace symrank
