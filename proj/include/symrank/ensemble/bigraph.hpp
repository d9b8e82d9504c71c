#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <utility>
#include <vector>

#include "symrank/error.hpp"
#include "symrank/linalg/matrix.hpp"

namespace symrank {

/// Bipartite graph with parts {v_0..v_{m-1}} and {w_0..w_{n-1}}, stored as
/// its m x n biadjacency matrix.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t m, std::size_t n) : m_(m), n_(n), bits_(m * n, 0) {}

  static BipartiteGraph from_edges(std::size_t m, std::size_t n,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    BipartiteGraph g(m, n);
    for (auto [i, j] : edges) g.set_edge(i, j, true);
    return g;
  }

  [[nodiscard]] std::size_t left_size() const { return m_; }
  [[nodiscard]] std::size_t right_size() const { return n_; }
  [[nodiscard]] std::size_t order() const { return m_ + n_; }

  [[nodiscard]] bool edge(std::size_t i, std::size_t j) const {
    check(i, j);
    return bits_[i * n_ + j] != 0;
  }

  void set_edge(std::size_t i, std::size_t j, bool present) {
    check(i, j);
    bits_[i * n_ + j] = present ? 1 : 0;
  }

  [[nodiscard]] std::size_t edge_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
  }

  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (edge(i, j)) out.emplace_back(i, j);
    return out;
  }

  /// Degrees of v_0..v_{m-1} followed by w_0..w_{n-1}.
  [[nodiscard]] std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> deg(m_ + n_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (bits_[i * n_ + j] != 0) {
          ++deg[i];
          ++deg[m_ + j];
        }
    return deg;
  }

  [[nodiscard]] std::size_t max_degree() const {
    const auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }

  /// Breadth-first connectivity over all m + n vertices.
  [[nodiscard]] bool is_connected() const {
    const std::size_t total = m_ + n_;
    if (total == 0) return true;
    std::vector<std::uint8_t> seen(total, 0);
    std::deque<std::size_t> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      auto visit = [&](std::size_t v) {
        if (seen[v] == 0) {
          seen[v] = 1;
          ++reached;
          queue.push_back(v);
        }
      };
      if (u < m_) {
        for (std::size_t j = 0; j < n_; ++j)
          if (edge(u, j)) visit(m_ + j);
      } else {
        for (std::size_t i = 0; i < m_; ++i)
          if (edge(i, u - m_)) visit(i);
      }
    }
    return reached == total;
  }

  /// Swaps the roles of the two parts.
  [[nodiscard]] BipartiteGraph transposed() const {
    BipartiteGraph t(n_, m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t.bits_[j * m_ + i] = bits_[i * n_ + j];
    return t;
  }

  /// Same parts, complementary edge set (bipartite complement).
  [[nodiscard]] BipartiteGraph complement() const {
    BipartiteGraph c = *this;
    for (auto& b : c.bits_) b = b != 0 ? 0 : 1;
    return c;
  }

  template <class T>
  [[nodiscard]] Matrix<T> biadjacency() const {
    Matrix<T> b(m_, n_, T(0));
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (bits_[i * n_ + j] != 0) b(i, j) = T(1);
    return b;
  }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= m_ || j >= n_) throw PreconditionError("bipartite vertex out of range");
  }

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Disjoint union of `copies` copies of g (block-diagonal biadjacency).
inline BipartiteGraph replicate_bigraph(const BipartiteGraph& g, std::size_t copies) {
  if (copies == 0) throw PreconditionError("replicate_bigraph needs copies >= 1");
  const std::size_t m = g.left_size();
  const std::size_t n = g.right_size();
  BipartiteGraph out(m * copies, n * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (auto [i, j] : g.edges()) out.set_edge(c * m + i, c * n + j, true);
  return out;
}

/// Each of the m*n possible edges present independently with probability
/// 1/2, from the top bit of a 64-bit Mersenne Twister seeded with `seed`.
inline BipartiteGraph random_bigraph(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  BipartiteGraph g(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) g.set_edge(i, j, (engine() >> 63) != 0);
  return g;
}

/// Graph isomorphism between two bipartite graphs viewed as simple graphs on
/// m + n vertices (a part swap is allowed). Backtracking with degree and
/// adjacency consistency checks; intended for graphs of a few dozen vertices.
bool isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2);

namespace detail {

struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint8_t>> adj;
  std::vector<std::size_t> degree;
};

inline SimpleGraph as_simple_graph(const BipartiteGraph& g) {
  SimpleGraph s;
  s.n = g.order();
  s.adj.assign(s.n, std::vector<std::uint8_t>(s.n, 0));
  for (auto [i, j] : g.edges()) {
    s.adj[i][g.left_size() + j] = 1;
    s.adj[g.left_size() + j][i] = 1;
  }
  s.degree.assign(s.n, 0);
  for (std::size_t u = 0; u < s.n; ++u)
    for (std::size_t v = 0; v < s.n; ++v) s.degree[u] += s.adj[u][v];
  return s;
}

inline bool extend_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                               const std::vector<std::size_t>& order,
                               std::vector<std::size_t>& map, std::vector<std::uint8_t>& used,
                               std::size_t depth) {
  if (depth == order.size()) return true;
  const std::size_t u = order[depth];
  for (std::size_t v = 0; v < b.n; ++v) {
    if (used[v] != 0 || a.degree[u] != b.degree[v]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const std::size_t w = order[k];
      ok = a.adj[u][w] == b.adj[v][map[w]];
    }
    if (!ok) continue;
    map[u] = v;
    used[v] = 1;
    if (extend_isomorphism(a, b, order, map, used, depth + 1)) return true;
    used[v] = 0;
  }
  return false;
}

}  // namespace detail

inline bool isomorphic(const BipartiteGraph& g1, const BipartiteGraph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  const auto a = detail::as_simple_graph(g1);
  const auto b = detail::as_simple_graph(g2);
  auto da = a.degree;
  auto db = b.degree;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  // BFS order keeps each new vertex adjacent to already-mapped ones.
  std::vector<std::size_t> order;
  std::vector<std::uint8_t> placed(a.n, 0);
  for (std::size_t s = 0; s < a.n; ++s) {
    if (placed[s] != 0) continue;
    std::deque<std::size_t> q{s};
    placed[s] = 1;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      order.push_back(u);
      for (std::size_t v = 0; v < a.n; ++v)
        if (a.adj[u][v] != 0 && placed[v] == 0) {
          placed[v] = 1;
          q.push_back(v);
        }
    }
  }
  std::vector<std::size_t> map(a.n, 0);
  std::vector<std::uint8_t> used(b.n, 0);
  return detail::extend_isomorphism(a, b, order, map, used, 0);
}

}  // namespace symrank
