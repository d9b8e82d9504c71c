#include <gtest/gtest.h>

#include "symrank/families/constructions.hpp"
#include "symrank/io/json.hpp"

using namespace symrank;
using symrank::io::json;

namespace {

Rational q(long n, long m = 1) { return Rational::reduce(n, m); }

}  // namespace

TEST(Json, TournamentRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_tournament(7, seed);
    const auto back = io::tournament_from_json(json::parse(io::to_json(t).dump()));
    ASSERT_EQ(back.size(), t.size());
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j)
        if (i != j) {
          EXPECT_EQ(back.beats(i, j), t.beats(i, j));
        }
  }
}

TEST(Json, TournamentIsOneBased) {
  const auto t = io::tournament_from_json(json::parse(R"({"n": 3, "arcs": [[1,2],[3,1],[2,3]]})"));
  EXPECT_TRUE(t.beats(0, 1));
  EXPECT_TRUE(t.beats(2, 0));
  EXPECT_TRUE(t.beats(1, 2));
  EXPECT_THROW(io::tournament_from_json(json::parse(R"({"n": 2, "arcs": [[0,1]]})")), ParseError);
}

TEST(Json, BigraphRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_bigraph(4, 6, seed);
    EXPECT_EQ(io::bigraph_from_json(io::to_json(g)), g);
  }
  EXPECT_EQ(io::to_json(BipartiteGraph(2, 1)).dump(), R"({"edges":[],"m":2,"n":1})");
}

TEST(Json, BigraphRejectsBadEdges) {
  EXPECT_THROW(io::bigraph_from_json(json::parse(R"({"m": 2, "n": 2, "edges": [[3,1]]})")), ParseError);
  EXPECT_THROW(io::bigraph_from_json(json::parse(R"({"m": 2, "edges": []})")), ParseError);
}

TEST(Json, PairRoundTrip) {
  const auto lin = TwoValuePair<Rational>::linear(q(2, 5), q(1), q(3));
  const auto sq = TwoValuePair<Rational>{PairFunction<Rational>::squared_diff(), q(-1), q(4)};
  const auto tab = TwoValuePair<Rational>::table(q(1), q(2), q(7), q(1, 3), q(5), q(-2));
  for (const auto& p : {lin, sq, tab}) {
    const auto back = io::pair_from_json<Rational>(json::parse(io::to_json(p).dump()));
    EXPECT_EQ(back.alpha, p.alpha);
    EXPECT_EQ(back.beta, p.beta);
    EXPECT_EQ(back.aa(), p.aa());
    EXPECT_EQ(back.ab(), p.ab());
    EXPECT_EQ(back.ba(), p.ba());
    EXPECT_EQ(back.bb(), p.bb());
  }
}

TEST(Json, PairOverQuadraticField) {
  const auto j = json::parse(R"j({"f": {"kind": "linear_theta", "theta": "1/2"},
                                 "alpha": 1, "beta": "3/2+1/2*sqrt(5)"})j");
  const auto p = io::pair_from_json<QuadExt>(j);
  EXPECT_EQ(p.beta, QuadExt(q(3, 2), q(1, 2), 5));
  EXPECT_EQ(io::pair_from_json<QuadExt>(io::to_json(p)).beta, p.beta);
}

TEST(Json, PairErrors) {
  EXPECT_THROW(io::pair_from_json<Rational>(json::parse(R"({"alpha": "1", "beta": "2"})")), ParseError);
  EXPECT_THROW(io::pair_from_json<Rational>(
                   json::parse(R"({"f": {"kind": "cubic"}, "alpha": "1", "beta": "2"})")),
               ParseError);
  EXPECT_THROW(io::pair_from_json<Rational>(
                   json::parse(R"({"f": {"kind": "squared_diff"}, "alpha": 1.5, "beta": "2"})")),
               ParseError);
  EXPECT_THROW(io::pair_from_json<Rational>(
                   json::parse(R"({"f": {"kind": "squared_diff"}, "alpha": "1/0", "beta": "2"})")),
               Error);
}

TEST(Json, FamilyRoundTrip) {
  for (const auto& f : {fano_family(), sunflower_family(12)}) {
    const auto back = io::family_from_json(json::parse(io::to_json(f).dump()));
    EXPECT_EQ(back.ground_size(), f.ground_size());
    EXPECT_TRUE(back.same_sets(f));
  }
  const auto f = io::family_from_json(json::parse(R"({"n": 4, "sets": [[1,2],[3,4]]})"));
  EXPECT_EQ(f.size(), 2U);
  EXPECT_EQ(elements_of(f[1]), (std::vector<std::size_t>{3, 4}));
}

TEST(Json, DesignRoundTrip) {
  for (const auto& d : {fano(), complement_design(fano()), hadamard_design(paley(11))}) {
    EXPECT_EQ(io::design_from_json(json::parse(io::to_json(d).dump())), d);
  }
  EXPECT_THROW(io::design_from_json(json::parse(R"({"v": 3, "blocks": [[0,1],[1,2],[0,2]]})")),
               ParseError);
}

TEST(Json, ReportShape) {
  const auto p = TwoValuePair<Rational>::linear(q(1, 2), q(1), q(2));
  const auto j = io::to_json(rank_sandwich(p, incidence_bigraph(fano())));
  EXPECT_EQ(j.at("nu"), 6);
  EXPECT_EQ(j.at("rank_upper"), 10);
  EXPECT_EQ(j.at("mu_squared"), "2");
  EXPECT_TRUE(j.at("holds").get<bool>());
}
