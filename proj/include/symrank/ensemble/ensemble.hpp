#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symrank/ensemble/bigraph.hpp"
#include "symrank/ensemble/pair_function.hpp"
#include "symrank/ensemble/tournament.hpp"
#include "symrank/error.hpp"
#include "symrank/linalg/matrix.hpp"

namespace symrank {

/// mu^2 = f(a,a) f(b,b) / (f(a,b) - f(b,a))^2.
template <class F>
F mu_squared(const TwoValuePair<F>& p) {
  const F gap = p.ab() - p.ba();
  if (gap == F(0)) {
    throw DegenerateEnsemble("f(alpha,beta) == f(beta,alpha): the ensemble has a single member");
  }
  return p.aa() * p.bb() / (gap * gap);
}

/// (f; a) is a good pair iff f(a_i, a_i) != 0 for every i.
template <class F>
bool good_pair_check(const PairFunction<F>& f, std::span<const F> a) {
  for (const auto& x : a) {
    if (!f.defined_at(x, x)) return false;
    if (f(x, x) == F(0)) return false;
  }
  return true;
}

/// (alpha^(m), beta^(n)).
template <class F>
std::vector<F> two_valued(const F& alpha, std::size_t m, const F& beta, std::size_t n) {
  std::vector<F> a(m, alpha);
  a.insert(a.end(), n, beta);
  return a;
}

/// M_T: zero diagonal; for i < j the entry is f(a_i, a_j) if i -> j and
/// f(a_j, a_i) otherwise.
template <class F>
Matrix<F> matrix_from_tournament(const PairFunction<F>& f, std::span<const F> a,
                                 const Tournament& t) {
  if (a.size() != t.size()) {
    throw PreconditionError("sequence length " + std::to_string(a.size()) +
                            " does not match tournament size " + std::to_string(t.size()));
  }
  const std::size_t n = a.size();
  Matrix<F> m(n, n, F(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const F v = t.beats(i, j) ? f(a[i], a[j]) : f(a[j], a[i]);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

/// T_M. When f(a_i, a_j) == f(a_j, a_i) the pair is oriented i -> j.
template <class F>
Tournament tournament_from_matrix(const Matrix<F>& m, const PairFunction<F>& f,
                                  std::span<const F> a) {
  const std::size_t n = a.size();
  if (m.rows() != n || m.cols() != n) throw PreconditionError("matrix/sequence size mismatch");
  Tournament t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(m(i, i) == F(0))) throw NotInEnsemble("nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(m(i, j) == m(j, i))) throw NotInEnsemble("matrix is not symmetric");
      if (m(i, j) == f(a[i], a[j])) continue;  // i -> j, also the tie-break
      if (m(i, j) == f(a[j], a[i])) {
        t.orient(j, i);
        continue;
      }
      throw NotInEnsemble("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") matches neither f(a_i,a_j) nor f(a_j,a_i)");
    }
  }
  return t;
}

/// M_G = [ f(a,a)(J_m - I_m)   C ; C^T   f(b,b)(J_n - I_n) ] with
/// C = f(a,b) B + f(b,a) (J - B).
template <class F>
Matrix<F> matrix_from_bigraph(const TwoValuePair<F>& p, const BipartiteGraph& g) {
  p.require_good();
  const std::size_t m = g.left_size();
  const std::size_t n = g.right_size();
  const F aa = p.aa();
  const F bb = p.bb();
  const F ab = p.ab();
  const F ba = p.ba();
  Matrix<F> out(m + n, m + n, F(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) out(i, j) = aa;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out(m + i, m + j) = bb;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const F& v = g.edge(i, j) ? ab : ba;
      out(i, m + j) = v;
      out(m + j, i) = v;
    }
  return out;
}

/// G_M: v_i ~ w_j iff M(i, m + j) == f(alpha, beta). Verifies that M belongs
/// to Sym(f; alpha^(m), beta^(n)).
template <class F>
BipartiteGraph bigraph_from_matrix(const Matrix<F>& mat, const TwoValuePair<F>& p, std::size_t m,
                                   std::size_t n) {
  if (mat.rows() != m + n || mat.cols() != m + n) {
    throw PreconditionError("matrix shape does not match part sizes");
  }
  const F aa = p.aa();
  const F bb = p.bb();
  const F ab = p.ab();
  const F ba = p.ba();
  if (ab == ba) throw DegenerateEnsemble("f(alpha,beta) == f(beta,alpha)");
  for (std::size_t i = 0; i < m + n; ++i)
    for (std::size_t j = 0; j < m + n; ++j) {
      if (!(mat(i, j) == mat(j, i))) throw NotInEnsemble("matrix is not symmetric");
      if (i == j) {
        if (!(mat(i, i) == F(0))) throw NotInEnsemble("nonzero diagonal entry");
      } else if (i < m && j < m) {
        if (!(mat(i, j) == aa)) throw NotInEnsemble("alpha block entry differs from f(alpha,alpha)");
      } else if (i >= m && j >= m) {
        if (!(mat(i, j) == bb)) throw NotInEnsemble("beta block entry differs from f(beta,beta)");
      }
    }
  BipartiteGraph g(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const F& v = mat(i, m + j);
      if (v == ab) {
        g.set_edge(i, j, true);
      } else if (!(v == ba)) {
        throw NotInEnsemble("cross entry (" + std::to_string(i) + "," + std::to_string(m + j) +
                            ") matches neither f(alpha,beta) nor f(beta,alpha)");
      }
    }
  return g;
}

}  // namespace symrank
