#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrank/error.hpp"
#include "symrank/linalg/matrix.hpp"

namespace symrank {

/// Square +-1 matrix with H H^T = order * I, checked on construction.
class HadamardMatrix {
 public:
  explicit HadamardMatrix(Matrix<int> entries) : h_(std::move(entries)) {
    if (!h_.is_square() || h_.rows() == 0) throw ConstructionFailed("Hadamard matrix must be square");
    for (int e : h_.entries())
      if (e != 1 && e != -1) throw ConstructionFailed("Hadamard entries must be +1 or -1");
    const std::size_t n = h_.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        long dot = 0;
        for (std::size_t k = 0; k < n; ++k) dot += h_(i, k) * h_(j, k);
        if (dot != (i == j ? static_cast<long>(n) : 0)) {
          throw ConstructionFailed("H H^T != n I at (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
        }
      }
  }

  [[nodiscard]] std::size_t order() const { return h_.rows(); }
  [[nodiscard]] const Matrix<int>& entries() const { return h_; }
  int operator()(std::size_t i, std::size_t j) const { return h_(i, j); }

  [[nodiscard]] bool is_normalized() const {
    for (std::size_t k = 0; k < order(); ++k)
      if (h_(0, k) != 1 || h_(k, 0) != 1) return false;
    return true;
  }

  /// Negates rows and then columns so the first row and column are all +1.
  [[nodiscard]] HadamardMatrix normalized() const {
    Matrix<int> h = h_;
    const std::size_t n = order();
    for (std::size_t i = 0; i < n; ++i)
      if (h(i, 0) == -1)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = -h(i, j);
    for (std::size_t j = 0; j < n; ++j)
      if (h(0, j) == -1)
        for (std::size_t i = 0; i < n; ++i) h(i, j) = -h(i, j);
    return HadamardMatrix(std::move(h));
  }

 private:
  Matrix<int> h_;
};

inline HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b) {
  return HadamardMatrix(kronecker(a.entries(), b.entries()));
}

/// Order 2^k: repeated Kronecker products of [1 1; 1 -1].
inline HadamardMatrix sylvester(std::size_t k) {
  Matrix<int> h(1, 1, 1);
  const Matrix<int> base(2, 2, std::vector<int>{1, 1, 1, -1});
  for (std::size_t i = 0; i < k; ++i) h = kronecker(h, base);
  return HadamardMatrix(std::move(h));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Quadratic character of x modulo the odd prime q: 0, 1 or -1.
inline int legendre(std::int64_t x, std::int64_t q) {
  x %= q;
  if (x < 0) x += q;
  if (x == 0) return 0;
  // Euler's criterion by square and multiply.
  std::int64_t result = 1;
  std::int64_t base = x;
  std::int64_t e = (q - 1) / 2;
  while (e > 0) {
    if ((e & 1) != 0) result = static_cast<std::int64_t>((__int128)result * base % q);
    base = static_cast<std::int64_t>((__int128)base * base % q);
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

/// Paley type I: for a prime q = 3 (mod 4), H = I + S with
/// S = [0 1^T; -1 Q] and Q the Jacobsthal matrix Q(i,j) = chi(j - i).
/// Returned normalized.
inline HadamardMatrix paley(std::uint64_t q) {
  if (!is_prime(q) || q % 4 != 3) {
    throw UnsupportedParameter("Paley construction needs a prime q = 3 (mod 4), got " +
                               std::to_string(q));
  }
  const std::size_t n = q + 1;
  Matrix<int> h(n, n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    h(0, j) = 1;
    h(j, 0) = -1;
  }
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      h(i + 1, j + 1) = legendre(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i),
                                 static_cast<std::int64_t>(q));
  for (std::size_t i = 0; i < n; ++i) h(i, i) += 1;
  return HadamardMatrix(std::move(h)).normalized();
}

/// Looks up a normalized Hadamard matrix of the given order in the
/// catalog generated by Sylvester, Paley (prime q) and Kronecker products.
inline std::optional<HadamardMatrix> catalog_hadamard(std::size_t order) {
  static thread_local std::map<std::size_t, std::optional<HadamardMatrix>> memo;
  if (auto it = memo.find(order); it != memo.end()) return it->second;
  std::optional<HadamardMatrix> found;
  if (order == 1 || order == 2) {
    found = sylvester(order == 1 ? 0 : 1);
  } else if (order % 4 == 0) {
    if ((order & (order - 1)) == 0) {
      std::size_t k = 0;
      while ((std::size_t{1} << k) < order) ++k;
      found = sylvester(k);
    } else if (is_prime(order - 1) && (order - 1) % 4 == 3) {
      found = paley(order - 1);
    } else {
      for (std::size_t a = 2; a * a <= order && !found; ++a) {
        if (order % a != 0) continue;
        auto x = catalog_hadamard(a);
        auto y = catalog_hadamard(order / a);
        if (x && y) found = kronecker(*x, *y).normalized();
      }
    }
  }
  memo.emplace(order, found);
  return found;
}

}  // namespace symrank
