#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symrank/designs/design.hpp"

using namespace symrank;
using symrank::testing::naive_rank;

namespace {

Rational q(long n, long m = 1) { return Rational::reduce(n, m); }

bool is_prime_power(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    return x == 1;
  }
  return false;
}

void expect_hadamard(const HadamardMatrix& h) {
  const auto& e = h.entries();
  const auto prod = e * e.transpose();
  for (std::size_t i = 0; i < h.order(); ++i)
    for (std::size_t j = 0; j < h.order(); ++j)
      EXPECT_EQ(prod(i, j), i == j ? static_cast<int>(h.order()) : 0);
}

}  // namespace

TEST(Hadamard, Sylvester) {
  EXPECT_EQ(sylvester(0).order(), 1U);
  EXPECT_EQ(sylvester(0)(0, 0), 1);
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto h = sylvester(k);
    EXPECT_EQ(h.order(), std::size_t{1} << k);
    EXPECT_TRUE(h.is_normalized());
    expect_hadamard(h);
  }
}

TEST(Hadamard, Paley) {
  for (std::uint64_t prime : {3U, 7U, 11U, 19U, 23U, 31U, 43U}) {
    const auto h = paley(prime);
    EXPECT_EQ(h.order(), prime + 1);
    EXPECT_TRUE(h.is_normalized());
    expect_hadamard(h);
  }
  EXPECT_THROW(paley(5), UnsupportedParameter);
  EXPECT_THROW(paley(15), UnsupportedParameter);
  EXPECT_THROW(paley(27), UnsupportedParameter);
}

TEST(Hadamard, RejectsInvalid) {
  EXPECT_THROW(HadamardMatrix(Matrix<int>(2, 2, std::vector<int>{1, 1, 1, 1})), ConstructionFailed);
  EXPECT_THROW(HadamardMatrix(Matrix<int>(2, 2, std::vector<int>{1, 2, 1, -1})), ConstructionFailed);
  EXPECT_THROW(HadamardMatrix(Matrix<int>(2, 3, 1)), ConstructionFailed);
}

TEST(Hadamard, CatalogAndKronecker) {
  for (std::size_t order : {1U, 2U, 4U, 8U, 12U, 16U, 20U, 24U, 32U, 48U, 96U}) {
    const auto h = catalog_hadamard(order);
    ASSERT_TRUE(h.has_value()) << order;
    EXPECT_EQ(h->order(), order);
    EXPECT_TRUE(h->is_normalized());
  }
  EXPECT_FALSE(catalog_hadamard(6).has_value());
  EXPECT_FALSE(catalog_hadamard(10).has_value());
  const auto k = kronecker(sylvester(1), paley(3));
  EXPECT_EQ(k.order(), 8U);
  expect_hadamard(k);
}

TEST(HadamardDesign, Parameters) {
  const auto fano_like = hadamard_design(sylvester(3));
  EXPECT_EQ(fano_like.v(), 7U);
  EXPECT_EQ(fano_like.k(), 3U);
  EXPECT_EQ(fano_like.lambda(), 1U);
  const auto d23 = hadamard_design(paley(23));
  EXPECT_EQ(d23.v(), 23U);
  EXPECT_EQ(d23.k(), 11U);
  EXPECT_EQ(d23.lambda(), 5U);
  EXPECT_THROW(hadamard_design(sylvester(2)), PreconditionError);
  const Matrix<int> raw = sylvester(3).entries();
  Matrix<int> flipped = raw;
  for (std::size_t j = 0; j < 8; ++j) flipped(1, j) = -flipped(1, j);
  EXPECT_THROW(hadamard_design(HadamardMatrix(flipped)), PreconditionError);
}

TEST(Fano, AndComplement) {
  const auto f = fano();
  EXPECT_EQ(f.v(), 7U);
  EXPECT_EQ(f.k(), 3U);
  EXPECT_EQ(f.lambda(), 1U);
  const auto c = complement_design(f);
  EXPECT_EQ(c.k(), 4U);
  EXPECT_EQ(c.lambda(), 2U);
  EXPECT_EQ(complement_design(c), f);
  const auto d = hadamard_design(paley(11));
  EXPECT_EQ(complement_design(complement_design(d)), d);
}

TEST(Design, ValidationRejectsBrokenBlocks) {
  auto blocks = fano().blocks();
  blocks[0] = {0, 1, 2};
  EXPECT_THROW(SymmetricDesign::from_blocks(7, blocks), ConstructionFailed);
  blocks.pop_back();
  EXPECT_THROW(SymmetricDesign::from_blocks(7, blocks), ConstructionFailed);
}

TEST(IncidenceGraph, Examples) {
  const auto h = incidence_bigraph(fano());
  EXPECT_EQ(h.order(), 14U);
  EXPECT_EQ(h.edge_count(), 21U);
  for (auto d : h.degrees()) EXPECT_EQ(d, 3U);
  EXPECT_EQ(incidence_bigraph(complement_design(fano())), h.complement());
  const auto g23 = incidence_bigraph(hadamard_design(paley(23)));
  EXPECT_EQ(g23.order(), 46U);
  for (auto d : g23.degrees()) EXPECT_EQ(d, 11U);
}

TEST(DesignRank, Fano) {
  const auto p = TwoValuePair<Rational>::linear(q(1, 2), q(1), q(2));
  const auto r = design_rank_instance(fano(), p);
  EXPECT_EQ(std::get<Rational>(r.mu_squared), q(2));
  EXPECT_EQ(r.nu, 6U);
  EXPECT_LE(r.exact_rank, 10U);
  EXPECT_TRUE(r.holds());

  const auto p3 = TwoValuePair<Rational>::linear(q(1, 2), q(1), q(3));
  const auto r3 = design_rank_instance(fano(), p3);
  EXPECT_EQ(std::get<Rational>(r3.mu_squared), q(3, 4));
  EXPECT_EQ(r3.nu, 0U);
  EXPECT_GE(r3.exact_rank, 12U);
}

TEST(DesignRank, Paley23) {
  const auto d = hadamard_design(paley(23));
  const auto p = TwoValuePair<Rational>::linear(q(1, 2), q(2), q(3));
  const auto r = design_rank_instance(d, p);
  EXPECT_EQ(std::get<Rational>(r.mu_squared), q(6));
  EXPECT_EQ(r.nu, 22U);
  EXPECT_LE(r.exact_rank, 26U);
  EXPECT_EQ(r.exact_rank, naive_rank(matrix_from_bigraph(p, incidence_bigraph(d))));
}

TEST(DesignRank, LowRankExactlyWhenMuSquaredIsOrder) {
  std::vector<SymmetricDesign> designs{fano(), complement_design(fano()),
                                       hadamard_design(paley(11)), hadamard_design(sylvester(4))};
  for (const auto& d : designs) {
    const long v = static_cast<long>(d.v());
    const Rational order(static_cast<long>(d.k() - d.lambda()));
    for (long a = 1; a <= 6; ++a)
      for (long b = 1; b <= 6; ++b) {
        if (a == b) continue;
        const auto p = TwoValuePair<Rational>::linear(q(1, 2), q(a), q(b));
        const auto r = design_rank_instance(d, p);
        const bool low = static_cast<long>(r.exact_rank) <= v + 3;
        EXPECT_EQ(low, std::get<Rational>(r.mu_squared) == order)
            << "v=" << v << " a=" << a << " b=" << b;
        if (!low) {
          EXPECT_GE(static_cast<long>(r.exact_rank), 2 * v - 3);
        }
      }
  }
}

TEST(Replication, RankBoundGrowsLinearly) {
  const auto h = incidence_bigraph(fano());
  const auto p = TwoValuePair<Rational>::linear(q(1, 2), q(1), q(2));
  EXPECT_EQ(replicate_bigraph(h, 1), h);
  EXPECT_EQ(replicate_bigraph(BipartiteGraph(2, 3), 4).edge_count(), 0U);
  for (std::size_t c = 1; c <= 5; ++c) {
    const auto r = rank_sandwich(p, replicate_bigraph(h, c));
    EXPECT_EQ(r.nu, 6 * c);
    EXPECT_LE(r.exact_rank, 8 * c + 2);
  }
  EXPECT_THROW(replicate_bigraph(h, 0), PreconditionError);
}

TEST(OneByTwo, Examples) {
  EXPECT_EQ(onebytwo_scan(2, 100), (std::vector<OneByTwoSolution>{{1, 2}}));
  EXPECT_TRUE(onebytwo_scan(4, 10'000, 2).empty());
  EXPECT_EQ(onebytwo_scan(6, 100), (std::vector<OneByTwoSolution>{{2, 3}}));
  EXPECT_EQ(onebytwo_scan(12, 100, 3), (std::vector<OneByTwoSolution>{{3, 4}}));
  EXPECT_THROW(onebytwo_scan(0, 100), PreconditionError);
  EXPECT_THROW(onebytwo_scan(2, 1), PreconditionError);
}

TEST(OneByTwo, PrimePowersOtherThanTwo) {
  for (std::uint64_t t = 3; t <= 50; ++t) {
    if (!is_prime_power(t)) continue;
    EXPECT_TRUE(onebytwo_scan(t, 3000, 2).empty()) << t;
  }
}

TEST(OneByTwo, MenonOrders) {
  for (std::uint64_t t = 2; t <= 7; ++t) EXPECT_TRUE(onebytwo_scan(t * t, 3000, 2).empty()) << t;
}

TEST(OneByTwo, SolutionsAreConsecutive) {
  for (std::uint64_t t = 1; t <= 60; ++t)
    for (const auto& s : onebytwo_scan(t, 500)) {
      EXPECT_EQ(s.beta, s.alpha + 1);
      EXPECT_EQ(s.alpha * s.beta, t);
    }
}
