#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "symrank/ensemble/ensemble.hpp"
#include "symrank/linalg/rank.hpp"

using namespace symrank;
using symrank::testing::naive_rank;

namespace {

Rational q(long n, long m = 1) { return Rational::reduce(n, m); }

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 40);
  std::uniform_int_distribution<long> den(1, 40);
  const long sign = (rng() & 1U) != 0 ? 1 : -1;
  return Rational::reduce(sign * num(rng), den(rng));
}

Rational random_theta(std::mt19937_64& rng) {
  const long den = 2 + static_cast<long>(rng() % 30);
  const long num = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(den - 1));
  return Rational::reduce(num, den);
}

BipartiteGraph heawood() {
  BipartiteGraph g(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t off : {0U, 1U, 3U}) g.set_edge(i, (i + off) % 7, true);
  return g;
}

BipartiteGraph random_bigraph(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  BipartiteGraph g(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) g.set_edge(i, j, (rng() & 1U) != 0);
  return g;
}

}  // namespace

TEST(PairFunction, Evaluation) {
  const auto f = PairFunction<Rational>::linear(q(1, 2));
  EXPECT_EQ(f(q(3), q(5)), q(3));
  const auto g = PairFunction<Rational>::linear(q(2, 5));
  EXPECT_EQ(g(q(1), q(4)), q(1) + q(1, 5) * q(4));
  EXPECT_EQ(PairFunction<Rational>::squared_diff()(q(1), q(4)), q(9));
  EXPECT_THROW(PairFunction<Rational>::linear(q(0)), PreconditionError);
  EXPECT_THROW(PairFunction<Rational>::linear(q(1)), PreconditionError);
}

TEST(PairFunction, TableIsPartial) {
  const auto p = TwoValuePair<Rational>::table(q(1), q(2), q(1), q(5), q(3), q(7));
  EXPECT_EQ(p.ab(), q(5));
  EXPECT_EQ(p.ba(), q(3));
  EXPECT_FALSE(p.f.defined_at(q(1), q(3)));
  EXPECT_THROW(p.f(q(3), q(1)), PreconditionError);
  EXPECT_THROW((TwoValuePair<Rational>::table(q(1), q(1), q(1), q(1), q(1), q(1))),
               PreconditionError);
}

TEST(MuSquared, Examples) {
  EXPECT_EQ(mu_squared(TwoValuePair<Rational>::linear(q(1, 2), q(1), q(2))), q(2));
  EXPECT_EQ(mu_squared(TwoValuePair<Rational>::linear(q(2, 5), q(1), q(4))), q(1));
  EXPECT_THROW(mu_squared(TwoValuePair<Rational>::linear(q(1, 2), q(1), q(1))),
               DegenerateEnsemble);
}

TEST(MuSquared, ClosedFormForLinearTheta) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const Rational th = random_theta(rng);
    const Rational a = random_nonzero(rng);
    const Rational b = random_nonzero(rng);
    if (a == b) continue;
    const Rational expected =
        (q(1) - th) * (q(1) - th) * a * b / (th * th * (a - b) * (a - b));
    EXPECT_EQ(mu_squared(TwoValuePair<Rational>::linear(th, a, b)), expected);
  }
}

TEST(MuSquared, SymmetryScaleAndRatio) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 1000; ++t) {
    const Rational th = random_theta(rng);
    const Rational a = random_nonzero(rng);
    const Rational b = random_nonzero(rng);
    const Rational k = random_nonzero(rng);
    if (a == b) continue;
    const auto mu = [&](const Rational& x, const Rational& y) {
      return mu_squared(TwoValuePair<Rational>::linear(th, x, y));
    };
    const Rational base = mu(a, b);
    EXPECT_EQ(mu(b, a), base);
    EXPECT_EQ(mu(k * a, k * b), base);
    EXPECT_EQ(mu(q(1), a / b), base);
    EXPECT_EQ(mu(q(1), b / a), base);
  }
}

TEST(GoodPair, Examples) {
  const auto f = PairFunction<Rational>::linear(q(1, 2));
  const std::vector<Rational> a{q(1), q(2), q(3)};
  EXPECT_TRUE(good_pair_check<Rational>(f, a));
  EXPECT_FALSE(good_pair_check<Rational>(PairFunction<Rational>::squared_diff(), a));
  const std::vector<Rational> z{q(0), q(1)};
  EXPECT_FALSE(good_pair_check<Rational>(f, z));
}

TEST(TournamentMatrix, SmallCases) {
  const auto f = PairFunction<Rational>::linear(q(1, 2));
  const std::vector<Rational> one{q(3)};
  EXPECT_EQ(matrix_from_tournament<Rational>(f, one, Tournament(1)), Matrix<Rational>(1, 1, q(0)));

  const auto g = PairFunction<Rational>::linear(q(1, 3));
  const std::vector<Rational> ab{q(1), q(2)};
  const auto m = matrix_from_tournament<Rational>(g, ab, Tournament(2));
  EXPECT_EQ(m(0, 1), g(q(1), q(2)));
  EXPECT_EQ(m(1, 0), g(q(1), q(2)));

  const std::vector<Rational> wrong{q(1)};
  EXPECT_THROW(matrix_from_tournament<Rational>(g, wrong, Tournament(2)), PreconditionError);
}

TEST(TournamentMatrix, SquaredDiffGivesRankThree) {
  const auto f = PairFunction<Rational>::squared_diff();
  const std::vector<Rational> a{q(1), q(2), q(3), q(4)};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto m = matrix_from_tournament<Rational>(f, a, random_tournament(4, seed));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Rational d = q(static_cast<long>(i) - static_cast<long>(j));
        EXPECT_EQ(m(i, j), d * d);
      }
    EXPECT_EQ(rank(m), 3U);
    EXPECT_EQ(naive_rank(m), 3U);
    EXPECT_EQ(tournament_from_matrix<Rational>(m, f, a), Tournament(4));
  }
}

TEST(TournamentMatrix, RoundTripAndSymmetry) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const auto f = PairFunction<Rational>::linear(random_theta(rng));
    std::vector<Rational> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(q(static_cast<long>(i) + 1));
    const auto tour = random_tournament(n, rng());
    const auto m = matrix_from_tournament<Rational>(f, a, tour);
    EXPECT_TRUE(m.is_symmetric());
    EXPECT_TRUE(m.has_zero_diagonal());
    if (f.theta() != q(1, 2)) {
      EXPECT_EQ(tournament_from_matrix<Rational>(m, f, a), tour);
    }
  }
}

TEST(TournamentMatrix, RejectsForeignEntry) {
  const auto f = PairFunction<Rational>::linear(q(1, 3));
  const std::vector<Rational> a{q(1), q(2), q(3)};
  auto m = matrix_from_tournament<Rational>(f, a, Tournament(3));
  m(0, 2) = q(100);
  m(2, 0) = q(100);
  EXPECT_THROW(tournament_from_matrix<Rational>(m, f, a), NotInEnsemble);
}

TEST(RandomTournament, Deterministic) {
  EXPECT_TRUE(random_tournament(1, 9).arcs().empty());
  EXPECT_EQ(random_tournament(20, 42), random_tournament(20, 42));
  EXPECT_NE(random_tournament(20, 42), random_tournament(20, 43));
  EXPECT_THROW(random_tournament(0, 1), PreconditionError);
}

TEST(RandomTournament, RoughlyFairCoins) {
  std::size_t forward = 0;
  std::size_t total = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto t = random_tournament(40, split_seed(7, s));
    for (auto [from, to] : t.arcs()) {
      forward += from < to ? 1 : 0;
      ++total;
    }
  }
  const double frac = static_cast<double>(forward) / static_cast<double>(total);
  EXPECT_GT(frac, 0.45);
  EXPECT_LT(frac, 0.55);
}

TEST(RandomTournament, RankNearFull) {
  const auto f = PairFunction<Rational>::linear(q(1, 3));
  const std::size_t n = 30;
  std::vector<Rational> a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(q(static_cast<long>(i) + 1));
  int good = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto m = matrix_from_tournament<Rational>(f, a, random_tournament(n, split_seed(1, s)));
    if (rank(m) >= n - 1) ++good;
  }
  EXPECT_GE(good, 48);  // 95% of 50, rounded up
}

TEST(BigraphMatrix, EmptyAndComplete) {
  const auto p = TwoValuePair<Rational>::linear(q(1, 3), q(1), q(2));
  const auto m = matrix_from_bigraph(p, BipartiteGraph(1, 1));
  EXPECT_EQ(m, Matrix<Rational>(2, 2, std::vector<Rational>{q(0), p.ba(), p.ba(), q(0)}));

  BipartiteGraph full(3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) full.set_edge(i, j, true);
  const auto mf = matrix_from_bigraph(p, full);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(mf(i, 3 + j), p.ab());
  EXPECT_EQ(bigraph_from_matrix(mf, p, 3, 2), full);
  EXPECT_EQ(bigraph_from_matrix(m, p, 1, 1).edge_count(), 0U);
}

TEST(BigraphMatrix, GoodPairRequired) {
  const auto p = TwoValuePair<Rational>::linear(q(1, 2), q(0), q(2));
  EXPECT_THROW(matrix_from_bigraph(p, BipartiteGraph(2, 2)), PreconditionError);
}

TEST(BigraphMatrix, FanoMatrix) {
  const auto p = TwoValuePair<Rational>::linear(q(1, 2), q(1), q(2));
  const auto m = matrix_from_bigraph(p, heawood());
  EXPECT_EQ(m.rows(), 14U);
  const auto r = rank(m);
  EXPECT_EQ(r, naive_rank(m));
  EXPECT_LE(r, 10U);
  EXPECT_EQ(bigraph_from_matrix(m, p, 7, 7), heawood());
}

TEST(BigraphMatrix, RandomRoundTrips) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 1 + rng() % 8;
    const std::size_t n = 1 + rng() % 8;
    const auto g = random_bigraph(rng, m, n);
    const auto p = TwoValuePair<Rational>::linear(random_theta(rng), q(1), q(3));
    EXPECT_EQ(bigraph_from_matrix(matrix_from_bigraph(p, g), p, m, n), g);
  }
}

TEST(BigraphMatrix, RejectsForeignEntry) {
  const auto p = TwoValuePair<Rational>::linear(q(1, 3), q(1), q(2));
  auto m = matrix_from_bigraph(p, heawood());
  m(0, 7) = q(99);
  m(7, 0) = q(99);
  EXPECT_THROW(bigraph_from_matrix(m, p, 7, 7), NotInEnsemble);
  m = matrix_from_bigraph(p, heawood());
  m(0, 1) = q(99);
  m(1, 0) = q(99);
  EXPECT_THROW(bigraph_from_matrix(m, p, 7, 7), NotInEnsemble);
}

TEST(BigraphMatrix, AgreesWithTournamentMatrix) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 50; ++t) {
    const std::size_t m = 1 + rng() % 6;
    const std::size_t n = 1 + rng() % 6;
    const auto p = TwoValuePair<Rational>::linear(random_theta(rng), q(1), q(5));
    const auto tour = random_tournament(m + n, rng());
    const auto a = two_valued(p.alpha, m, p.beta, n);
    const auto mt = matrix_from_tournament<Rational>(p.f, a, tour);
    BipartiteGraph g(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) g.set_edge(i, j, tour.beats(i, m + j));
    EXPECT_EQ(matrix_from_bigraph(p, g), mt);
  }
}

TEST(Bigraph, IsomorphismCheck) {
  const auto h = heawood();
  std::vector<std::size_t> pl(7);
  std::vector<std::size_t> pr(7);
  std::iota(pl.begin(), pl.end(), 0);
  std::iota(pr.begin(), pr.end(), 0);
  std::mt19937_64 rng(26);
  std::shuffle(pl.begin(), pl.end(), rng);
  std::shuffle(pr.begin(), pr.end(), rng);
  BipartiteGraph relabelled(7, 7);
  for (auto [i, j] : h.edges()) relabelled.set_edge(pl[i], pr[j], true);
  EXPECT_TRUE(isomorphic(h, relabelled));
  EXPECT_TRUE(isomorphic(h, relabelled.transposed()));
  auto broken = relabelled;
  broken.set_edge(0, 0, !broken.edge(0, 0));
  EXPECT_FALSE(isomorphic(h, broken));
  // 6-cycle plus an isolated edge vs two disjoint paths, same degrees
  EXPECT_FALSE(isomorphic(BipartiteGraph::from_edges(4, 4, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}, {3, 3}}),
                          BipartiteGraph::from_edges(4, 4, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}})));
}

TEST(Bigraph, ReplicationAndComplement) {
  const auto h = heawood();
  const auto r = replicate_bigraph(h, 3);
  EXPECT_EQ(r.left_size(), 21U);
  EXPECT_EQ(r.edge_count(), 63U);
  EXPECT_FALSE(r.is_connected());
  EXPECT_TRUE(h.is_connected());
  EXPECT_EQ(h.complement().edge_count(), 49U - 21U);
  EXPECT_EQ(h.max_degree(), 3U);
}

TEST(Bigraph, SeededRandomIsReproducible) {
  EXPECT_EQ(random_bigraph(5, 7, 42), random_bigraph(5, 7, 42));
  EXPECT_NE(random_bigraph(5, 7, 42), random_bigraph(5, 7, 43));
  const auto g = random_bigraph(3, 9, 1);
  EXPECT_EQ(g.left_size(), 3U);
  EXPECT_EQ(g.right_size(), 9U);
}
