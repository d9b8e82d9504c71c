#pragma once

// JSON encodings of the library's objects (nlohmann/json). Vertices, points
// and set elements are 1-based on the wire; scalars use the text form.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "symrank/designs/design.hpp"
#include "symrank/ensemble/bigraph.hpp"
#include "symrank/ensemble/pair_function.hpp"
#include "symrank/ensemble/tournament.hpp"
#include "symrank/exactfield/scalar.hpp"
#include "symrank/families/set_family.hpp"
#include "symrank/spectra/spectra.hpp"

namespace symrank::io {

using nlohmann::json;

inline void require(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
}

inline std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("scalar must be a string or an integer");
}

// Tournament: {"n": 3, "arcs": [[1,2],[3,1],[2,3]]}, each arc from -> to.
inline json to_json(const Tournament& t) {
  json arcs = json::array();
  for (auto [from, to] : t.arcs()) arcs.push_back({from + 1, to + 1});
  return {{"n", t.size()}, {"arcs", arcs}};
}

inline Tournament tournament_from_json(const json& j) {
  require(j, "n");
  require(j, "arcs");
  const auto n = j.at("n").get<std::size_t>();
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& a : j.at("arcs")) {
    const auto from = a.at(0).get<std::size_t>();
    const auto to = a.at(1).get<std::size_t>();
    if (from < 1 || to < 1) throw ParseError("tournament vertices are 1-based");
    arcs.emplace_back(from - 1, to - 1);
  }
  return Tournament::from_arcs(n, arcs);
}

// Bipartite graph: {"m": 2, "n": 3, "edges": [[1,1],[2,3]]}.
inline json to_json(const BipartiteGraph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
  return {{"m", g.left_size()}, {"n", g.right_size()}, {"edges", edges}};
}

inline BipartiteGraph bigraph_from_json(const json& j) {
  require(j, "m");
  require(j, "n");
  const auto m = j.at("m").get<std::size_t>();
  const auto n = j.at("n").get<std::size_t>();
  BipartiteGraph g(m, n);
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      const auto a = e.at(0).get<std::size_t>();
      const auto b = e.at(1).get<std::size_t>();
      if (a < 1 || b < 1 || a > m || b > n) throw ParseError("edge endpoint out of range");
      g.set_edge(a - 1, b - 1, true);
    }
  }
  return g;
}

// Pair: {"f": {"kind": "linear_theta", "theta": "1/2"}, "alpha": "1", "beta": "2"}
// with kind one of linear_theta, squared_diff, table (fields aa, ab, ba, bb).
template <class F>
json to_json(const TwoValuePair<F>& p) {
  json f;
  std::visit(
      [&](const auto& alt) {
        using Alt = std::decay_t<decltype(alt)>;
        if constexpr (std::is_same_v<Alt, typename PairFunction<F>::LinearTheta>) {
          f = {{"kind", "linear_theta"}, {"theta", alt.theta.to_string()}};
        } else if constexpr (std::is_same_v<Alt, typename PairFunction<F>::SquaredDiff>) {
          f = {{"kind", "squared_diff"}};
        } else {
          f = {{"kind", "table"},
               {"aa", alt.aa.to_string()},
               {"ab", alt.ab.to_string()},
               {"ba", alt.ba.to_string()},
               {"bb", alt.bb.to_string()}};
        }
      },
      p.f.variant());
  return {{"f", f}, {"alpha", p.alpha.to_string()}, {"beta", p.beta.to_string()}};
}

template <class F>
TwoValuePair<F> pair_from_json(const json& j) {
  require(j, "f");
  require(j, "alpha");
  require(j, "beta");
  const F alpha = parse_as<F>(scalar_text(j.at("alpha")));
  const F beta = parse_as<F>(scalar_text(j.at("beta")));
  const auto& f = j.at("f");
  require(f, "kind");
  const auto kind = f.at("kind").get<std::string>();
  if (kind == "linear_theta") {
    require(f, "theta");
    return {PairFunction<F>::linear(Rational::parse(scalar_text(f.at("theta")))), alpha, beta};
  }
  if (kind == "squared_diff") return {PairFunction<F>::squared_diff(), alpha, beta};
  if (kind == "table") {
    auto v = [&](const char* key) {
      require(f, key);
      return parse_as<F>(scalar_text(f.at(key)));
    };
    return TwoValuePair<F>::table(alpha, beta, v("aa"), v("ab"), v("ba"), v("bb"));
  }
  throw ParseError("unknown pair function kind '" + kind + "'");
}

// Family: {"n": 8, "sets": [[1,2],[1,3,5,7]]}, each set ascending.
inline json to_json(const SetFamily& f) {
  json sets = json::array();
  for (SetMask s : f.sets()) sets.push_back(elements_of(s));
  return {{"n", f.ground_size()}, {"sets", sets}};
}

inline SetFamily family_from_json(const json& j) {
  require(j, "n");
  require(j, "sets");
  std::vector<std::vector<std::size_t>> lists;
  for (const auto& s : j.at("sets")) lists.push_back(s.get<std::vector<std::size_t>>());
  return SetFamily::from_lists(j.at("n").get<std::size_t>(), lists);
}

// Design: {"v": 7, "k": 3, "lambda": 1, "blocks": [[1,2,4], ...]}.
inline json to_json(const SymmetricDesign& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks()) {
    json block = json::array();
    for (std::size_t p : b) block.push_back(p + 1);
    blocks.push_back(block);
  }
  return {{"v", d.v()}, {"k", d.k()}, {"lambda", d.lambda()}, {"blocks", blocks}};
}

inline SymmetricDesign design_from_json(const json& j) {
  require(j, "v");
  require(j, "blocks");
  const auto v = j.at("v").get<std::size_t>();
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : j.at("blocks")) {
    std::vector<std::size_t> block;
    for (const auto& p : b) {
      const auto x = p.get<std::size_t>();
      if (x < 1) throw ParseError("design points are 1-based");
      block.push_back(x - 1);
    }
    blocks.push_back(std::move(block));
  }
  return SymmetricDesign::from_blocks(v, blocks);
}

inline json to_json(const SpectralReport& r) {
  return {{"m", r.m},
          {"n", r.n},
          {"mu_squared", to_string(r.mu_squared)},
          {"nu", r.nu},
          {"rank_lower", r.rank_lower},
          {"rank_upper", r.rank_upper},
          {"exact_rank", r.exact_rank},
          {"holds", r.holds()}};
}

inline json to_json(const RowlinsonReport& r) {
  json j = {{"applicable", r.applicable},
            {"nu", r.nu},
            {"order", r.order},
            {"max_degree", r.max_degree}};
  if (r.applicable) {
    j["bound_a_holds"] = r.bound_a_holds;
    j["bound_b_applicable"] = r.bound_b_applicable;
    j["bound_b_holds"] = r.bound_b_holds;
  } else {
    j["reason"] = r.reason;
  }
  return j;
}

}  // namespace symrank::io
