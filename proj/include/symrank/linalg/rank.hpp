#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symrank/exactfield/quadext.hpp"
#include "symrank/exactfield/rational.hpp"
#include "symrank/linalg/matrix.hpp"

namespace symrank {

namespace detail {

/// Element x + y*sqrt(d) of the ring Z[sqrt d]; d lives with the matrix.
struct ZSqrt {
  BigInt x;
  BigInt y;
};

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const ZSqrt& v) { return sgn(v.x) == 0 && sgn(v.y) == 0; }
template <class F>
bool is_zero(const F& v) {
  return v == F(0);
}

struct IntegerOps {
  // (p*a - q*b) / prev, division exact.
  static void update(BigInt& target, const BigInt& p, const BigInt& a, const BigInt& q,
                     const BigInt& b, const BigInt& prev, BigInt& scratch) {
    mpz_mul(target.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    mpz_mul(scratch.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
    mpz_sub(target.get_mpz_t(), target.get_mpz_t(), scratch.get_mpz_t());
    if (prev != 1) mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
  }
};

struct ZSqrtOps {
  std::int64_t d;

  [[nodiscard]] ZSqrt mul(const ZSqrt& u, const ZSqrt& v) const {
    ZSqrt r;
    r.x = u.x * v.x + u.y * v.y * d;
    r.y = u.x * v.y + u.y * v.x;
    return r;
  }

  // Exact division in Z[sqrt d]: u / v = u * conj(v) / N(v).
  [[nodiscard]] ZSqrt divexact(const ZSqrt& u, const ZSqrt& v) const {
    if (is_zero(v.y)) {
      ZSqrt r;
      mpz_divexact(r.x.get_mpz_t(), u.x.get_mpz_t(), v.x.get_mpz_t());
      mpz_divexact(r.y.get_mpz_t(), u.y.get_mpz_t(), v.x.get_mpz_t());
      return r;
    }
    const BigInt norm = v.x * v.x - v.y * v.y * d;
    ZSqrt r = mul(u, ZSqrt{v.x, -v.y});
    mpz_divexact(r.x.get_mpz_t(), r.x.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(r.y.get_mpz_t(), r.y.get_mpz_t(), norm.get_mpz_t());
    return r;
  }

  void update(ZSqrt& target, const ZSqrt& p, const ZSqrt& a, const ZSqrt& q, const ZSqrt& b,
              const ZSqrt& prev) const {
    ZSqrt left = mul(p, a);
    ZSqrt right = mul(q, b);
    left.x -= right.x;
    left.y -= right.y;
    target = (sgn(prev.y) == 0 && prev.x == 1) ? std::move(left) : divexact(left, prev);
  }
};

// Fraction-free (Bareiss) elimination. Pivot: first nonzero entry of the
// current column, scanning rows top-down; zero columns are skipped. Every
// intermediate entry is a minor of the input, so the divisions are exact.
// `update(target, pivot, a, lead, b, prev)` must set target = (pivot*a - lead*b)/prev.
template <class T, class Update>
std::size_t bareiss_rank(Matrix<T>& m, const T& one, Update&& update) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  T prev = one;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T lead = m(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        update(m(i, j), m(r, c), m(i, j), lead, m(r, j), prev);
      }
      m(i, c) = T{};
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

inline std::size_t integer_rank(Matrix<BigInt> m) {
  BigInt scratch;
  return bareiss_rank(m, BigInt(1),
                      [&](BigInt& t, const BigInt& p, const BigInt& a, const BigInt& q,
                          const BigInt& b, const BigInt& prev) {
                        IntegerOps::update(t, p, a, q, b, prev, scratch);
                      });
}

// Scales every row by the lcm of its denominators.
inline Matrix<BigInt> clear_denominators(const Matrix<Rational>& m) {
  Matrix<BigInt> out(m.rows(), m.cols(), BigInt(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (const auto& e : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.raw().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& q = m(i, j).raw();
      BigInt v = l / q.get_den();
      out(i, j) = v * q.get_num();
    }
  }
  return out;
}

}  // namespace detail

/// Exact rank over the field of the entries (generic fallback: Bareiss with
/// the field's own division).
template <class F>
std::size_t rank(Matrix<F> m) {
  return detail::bareiss_rank(m, F(1),
                              [](F& t, const F& p, const F& a, const F& q, const F& b,
                                 const F& prev) { t = (p * a - q * b) / prev; });
}

/// Rational matrices are reduced to integer matrices row by row.
inline std::size_t rank(const Matrix<Rational>& m) {
  return detail::integer_rank(detail::clear_denominators(m));
}

inline std::size_t rank(const Matrix<BigInt>& m) { return detail::integer_rank(m); }

/// Matrices over Q(sqrt d) are scaled row-wise into Z[sqrt d] and
/// eliminated there.
inline std::size_t rank(const Matrix<QuadExt>& m) {
  std::int64_t d = 0;
  for (const auto& e : m.entries()) {
    if (e.d() == 0) continue;
    if (d == 0) {
      d = e.d();
    } else if (e.d() != d) {
      throw IncompatibleField("matrix mixes quadratic fields");
    }
  }
  using detail::ZSqrt;
  Matrix<ZSqrt> z(m.rows(), m.cols(), ZSqrt{0, 0});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt l = 1;
    for (const auto& e : m.row(i)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.a().raw().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.b().raw().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& a = m(i, j).a().raw();
      const auto& b = m(i, j).b().raw();
      z(i, j) = ZSqrt{(l / a.get_den()) * a.get_num(), (l / b.get_den()) * b.get_num()};
    }
  }
  if (d == 0) d = 2;  // all entries rational; any d works
  const detail::ZSqrtOps ops{d};
  return detail::bareiss_rank(z, ZSqrt{1, 0},
                              [&](ZSqrt& t, const ZSqrt& p, const ZSqrt& a, const ZSqrt& q,
                                  const ZSqrt& b, const ZSqrt& prev) {
                                ops.update(t, p, a, q, b, prev);
                              });
}

template <class F>
std::size_t nullity(const Matrix<F>& m) {
  return m.cols() - rank(m);
}

}  // namespace symrank
