#pragma once

// Command-line front end. Every subcommand writes one JSON report (or CSV
// with --format csv) that echoes its configuration.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "symrank/io/json.hpp"
#include "symrank/symrank.hpp"

namespace symrank::cli {

using io::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct Report {
  json result;
  std::optional<std::string> csv;  // body for --format csv, if the command has one
  bool verified = true;
};

inline std::string read_text(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

inline bool mentions_sqrt(const std::vector<std::string>& texts) {
  return std::any_of(texts.begin(), texts.end(),
                     [](const std::string& t) { return t.find("sqrt") != std::string::npos; });
}

template <class T>
std::string matrix_csv(const Matrix<T>& m) {
  std::ostringstream os;
  write_csv(os, m);
  return os.str();
}

inline std::string summary_csv(const json& result) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [key, value] : result.items()) {
    if (value.is_structured()) continue;
    os << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return os.str();
}

// Pair options shared by several subcommands.
struct PairOptions {
  std::string pair_file;
  std::string theta = "1/2";
  std::string alpha = "1";
  std::string beta = "2";
  std::string table;
  bool squared_diff = false;

  void attach(CLI::App* app) {
    app->add_option("--pair", pair_file, "pair JSON file");
    app->add_option("--theta", theta, "theta of f_theta")->capture_default_str();
    app->add_option("--alpha", alpha, "alpha")->capture_default_str();
    app->add_option("--beta", beta, "beta")->capture_default_str();
    app->add_option("--table", table, "explicit values f(a,a),f(a,b),f(b,a),f(b,b)");
    app->add_flag("--squared-diff", squared_diff, "use f(x,y) = (x-y)^2");
  }

  [[nodiscard]] json raw() const {
    if (!pair_file.empty()) return read_json(pair_file);
    json f;
    if (!table.empty()) {
      const auto v = split_list(table);
      if (v.size() != 4) throw ParseError("--table needs four comma-separated values");
      f = {{"kind", "table"}, {"aa", v[0]}, {"ab", v[1]}, {"ba", v[2]}, {"bb", v[3]}};
    } else if (squared_diff) {
      f = {{"kind", "squared_diff"}};
    } else {
      f = {{"kind", "linear_theta"}, {"theta", theta}};
    }
    return {{"f", f}, {"alpha", alpha}, {"beta", beta}};
  }

  // Calls fn(TwoValuePair<F>) with F = QuadExt when any scalar is irrational.
  template <class Fn>
  auto visit(Fn&& fn) const {
    const json j = raw();
    std::vector<std::string> texts{io::scalar_text(j.at("alpha")), io::scalar_text(j.at("beta"))};
    if (j.contains("f")) {
      for (const char* key : {"aa", "ab", "ba", "bb"})
        if (j.at("f").contains(key)) texts.push_back(io::scalar_text(j.at("f").at(key)));
    }
    if (mentions_sqrt(texts)) return fn(io::pair_from_json<QuadExt>(j));
    return fn(io::pair_from_json<Rational>(j));
  }
};

// Graph input shared by bigraph / theorem1-verify.
struct GraphOptions {
  std::string graph_file;
  std::string kind = "heawood";
  std::size_t m = 3;
  std::size_t n = 3;
  std::uint64_t seed = 1;
  std::size_t copies = 1;

  void attach(CLI::App* app) {
    app->add_option("--graph", graph_file, "bipartite graph JSON file");
    app->add_option("--graph-kind", kind, "heawood, complete-minus-matching, complete, empty, random")
        ->check(CLI::IsMember({"heawood", "complete-minus-matching", "complete", "empty", "random"}))
        ->capture_default_str();
    app->add_option("--m", m, "left part size")->capture_default_str();
    app->add_option("--n", n, "right part size")->capture_default_str();
    app->add_option("--seed", seed, "seed for random graphs")->capture_default_str();
    app->add_option("--copies", copies, "disjoint copies of the graph")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  [[nodiscard]] BipartiteGraph build() const {
    BipartiteGraph g;
    if (!graph_file.empty()) {
      g = io::bigraph_from_json(read_json(graph_file));
    } else if (kind == "heawood") {
      g = incidence_bigraph(fano());
    } else if (kind == "complete-minus-matching") {
      g = complete_minus_matching(n);
    } else if (kind == "complete") {
      g = BipartiteGraph(m, n).complement();
    } else if (kind == "empty") {
      g = BipartiteGraph(m, n);
    } else {
      g = random_bigraph(m, n, seed);
    }
    return copies > 1 ? replicate_bigraph(g, copies) : g;
  }
};

inline std::size_t default_threads() {
  return std::max(1U, std::thread::hardware_concurrency());
}

inline Rational parse_theta(const std::string& text) { return Rational::parse(text); }

inline SymmetricDesign named_design(const std::string& name) {
  if (name == "fano") return fano();
  if (name == "fano-complement") return complement_design(fano());
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string kind = name.substr(0, colon);
    const auto param = std::stoull(name.substr(colon + 1));
    if (kind == "paley") return hadamard_design(paley(param));
    if (kind == "sylvester") return hadamard_design(sylvester(param));
  }
  throw ParseError("unknown design '" + name + "' (fano, fano-complement, paley:Q, sylvester:K)");
}

inline json hadamard_json(const HadamardMatrix& h) {
  json rows = json::array();
  for (std::size_t i = 0; i < h.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < h.order(); ++j) row.push_back(h(i, j));
    rows.push_back(row);
  }
  return {{"order", h.order()}, {"normalized", h.is_normalized()}, {"rows", rows}};
}

inline json theta_check_json(const SetFamily& f, const ThetaCheck& c) {
  json j = {{"theta_intersecting", c.ok}};
  if (c.violation) {
    j["violation"] = {elements_of(f[c.violation->first]), elements_of(f[c.violation->second])};
  }
  return j;
}

/// Runs one invocation. Reports go to `out` (or --out); diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ranks of structured symmetric matrices, designs and set families", "symrank"};
  app.require_subcommand(1);
  std::string out_path;
  std::string format = "json";
  app.add_option("--out", out_path, "write the report to FILE")->option_text("FILE");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.fallthrough();

  std::function<Report()> action;
  std::size_t threads = default_threads();
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);
  };

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "exact rank and nullity of a CSV matrix");
  std::string rank_in;
  rank_cmd->add_option("--in", rank_in, "CSV file, '-' for stdin")->required();
  rank_cmd->callback([&] {
    action = [&] {
      std::istringstream is(read_text(rank_in));
      const auto raw = read_csv_scalars(is);
      Report r;
      std::size_t rk = 0;
      std::string field = "Q";
      if (has_irrational_entry(raw)) {
        const auto m = raw.map<QuadExt>([](const ExactScalar& s) { return to_quadext(s); });
        rk = rank(m);
        for (const auto& e : m.entries())
          if (e.d() != 0 && !e.is_rational()) field = "Q(sqrt(" + std::to_string(e.d()) + "))";
      } else {
        rk = rank(raw.map<Rational>([](const ExactScalar& s) { return scalar_cast<Rational>(s); }));
      }
      r.result = {{"rows", raw.rows()}, {"cols", raw.cols()}, {"field", field},
                  {"rank", rk},         {"nullity", raw.cols() - rk}};
      return r;
    };
  });

  // mu
  auto* mu_cmd = app.add_subcommand("mu", "mu^2 of a two-value pair");
  PairOptions mu_pair;
  mu_pair.attach(mu_cmd);
  mu_cmd->callback([&] {
    action = [&] {
      return mu_pair.visit([](const auto& p) {
        Report r;
        r.result = {{"pair", io::to_json(p)},
                    {"f_aa", p.aa().to_string()},
                    {"f_ab", p.ab().to_string()},
                    {"f_ba", p.ba().to_string()},
                    {"f_bb", p.bb().to_string()},
                    {"good_pair", p.is_good()},
                    {"mu_squared", to_string(simplify(ExactScalar(mu_squared(p))))}};
        return r;
      });
    };
  });

  // tournament
  auto* tour_cmd = app.add_subcommand("tournament", "tournament matrix M_T and its rank");
  std::string tour_file;
  std::string tour_matrix;
  std::size_t tour_n = 5;
  std::uint64_t tour_seed = 1;
  std::string tour_a;
  std::string tour_theta = "1/2";
  bool tour_sq = false;
  tour_cmd->add_option("--in", tour_file, "tournament JSON (default: random)");
  tour_cmd->add_option("--matrix", tour_matrix, "CSV matrix: recover T_M instead");
  tour_cmd->add_option("--n", tour_n, "number of vertices")->capture_default_str();
  tour_cmd->add_option("--seed", tour_seed, "seed of the random tournament")->capture_default_str();
  tour_cmd->add_option("--a", tour_a, "comma-separated sequence (default 1..n)");
  tour_cmd->add_option("--theta", tour_theta, "theta of f_theta")->capture_default_str();
  tour_cmd->add_flag("--squared-diff", tour_sq, "use f(x,y) = (x-y)^2");
  tour_cmd->callback([&] {
    action = [&] {
      const auto f = tour_sq ? PairFunction<Rational>::squared_diff()
                             : PairFunction<Rational>::linear(parse_theta(tour_theta));
      auto sequence = [&](std::size_t n) {
        std::vector<Rational> a;
        if (tour_a.empty()) {
          for (std::size_t i = 1; i <= n; ++i) a.emplace_back(static_cast<long>(i));
        } else {
          for (const auto& t : split_list(tour_a)) a.push_back(Rational::parse(t));
        }
        return a;
      };
      Report r;
      if (!tour_matrix.empty()) {
        std::istringstream is(read_text(tour_matrix));
        const auto m = read_csv<Rational>(is);
        const auto a = sequence(m.rows());
        const auto t = tournament_from_matrix<Rational>(m, f, a);
        r.result = {{"f", f.describe()}, {"tournament", io::to_json(t)}, {"rank", rank(m)}};
        return r;
      }
      const Tournament t =
          tour_file.empty() ? random_tournament(tour_n, tour_seed)
                            : io::tournament_from_json(read_json(tour_file));
      const auto a = sequence(t.size());
      const auto m = matrix_from_tournament<Rational>(f, a, t);
      json seq = json::array();
      for (const auto& x : a) seq.push_back(x.to_string());
      r.result = {{"f", f.describe()},
                  {"a", seq},
                  {"good_pair", good_pair_check<Rational>(f, a)},
                  {"tournament", io::to_json(t)},
                  {"rank", rank(m)}};
      r.csv = matrix_csv(m);
      return r;
    };
  });

  // bigraph
  auto* big_cmd = app.add_subcommand("bigraph", "matrix M_G of a bipartite graph and a pair");
  PairOptions big_pair;
  GraphOptions big_graph;
  std::string big_matrix;
  big_pair.attach(big_cmd);
  big_graph.attach(big_cmd);
  big_cmd->add_option("--matrix", big_matrix, "CSV matrix: recover G_M instead (uses --m, --n)");
  big_cmd->callback([&] {
    action = [&] {
      return big_pair.visit([&](const auto& p) {
        using F = std::decay_t<decltype(p.alpha)>;
        Report r;
        if (!big_matrix.empty()) {
          std::istringstream is(read_text(big_matrix));
          const auto m = read_csv_scalars(is).template map<F>(
              [](const ExactScalar& s) { return scalar_cast<F>(s); });
          const auto g = bigraph_from_matrix(m, p, big_graph.m, big_graph.n);
          r.result = {{"pair", io::to_json(p)}, {"graph", io::to_json(g)}};
          return r;
        }
        const auto g = big_graph.build();
        const auto m = matrix_from_bigraph(p, g);
        r.result = {{"pair", io::to_json(p)},
                    {"graph", io::to_json(g)},
                    {"size", m.rows()},
                    {"rank", rank(m)}};
        if (!(p.ab() == p.ba())) {
          const F mu2 = mu_squared(p);
          r.result["mu_squared"] = to_string(simplify(ExactScalar(mu2)));
          if (!(mu2 == F(0))) r.result["nu"] = bigraph_multiplicity(g, mu2);
        }
        r.csv = matrix_csv(m);
        return r;
      });
    };
  });

  // theorem1-verify
  auto* t1_cmd = app.add_subcommand("theorem1-verify", "check m+n-2-nu <= rank <= m+n+2-nu");
  PairOptions t1_pair;
  GraphOptions t1_graph;
  std::size_t t1_trials = 0;
  std::size_t t1_max = 12;
  t1_pair.attach(t1_cmd);
  t1_graph.attach(t1_cmd);
  t1_cmd->add_option("--random-trials", t1_trials,
                     "check this many random graphs with parts up to --max-size instead")
      ->capture_default_str();
  t1_cmd->add_option("--max-size", t1_max, "largest part size for --random-trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_threads(t1_cmd);
  t1_cmd->callback([&] {
    action = [&] {
      return t1_pair.visit([&](const auto& p) {
        Report r;
        if (t1_trials == 0) {
          const auto rep = rank_sandwich(p, t1_graph.build());
          r.result = {{"pair", io::to_json(p)}, {"report", io::to_json(rep)}};
          r.verified = rep.holds();
          return r;
        }
        std::vector<SpectralReport> reps(t1_trials);
        auto work = [&](std::size_t id) {
          for (std::size_t i = id; i < t1_trials; i += threads) {
            const std::uint64_t s = split_seed(t1_graph.seed, i);
            const std::size_t m = 1 + s % t1_max;
            const std::size_t n = 1 + (s >> 20) % t1_max;
            reps[i] = rank_sandwich(p, random_bigraph(m, n, split_seed(s, 1)));
          }
        };
        std::vector<std::jthread> pool;
        for (std::size_t id = 0; id < std::min(threads, t1_trials); ++id) pool.emplace_back(work, id);
        pool.clear();
        std::size_t violations = 0;
        json first = nullptr;
        for (std::size_t i = 0; i < reps.size(); ++i) {
          if (reps[i].holds()) continue;
          if (violations++ == 0) first = {{"trial", i}, {"report", io::to_json(reps[i])}};
        }
        r.result = {{"pair", io::to_json(p)},
                    {"trials", t1_trials},
                    {"violations", violations},
                    {"first_violation", first}};
        r.verified = violations == 0;
        return r;
      });
    };
  });

  // theorem2
  auto* t2_cmd = app.add_subcommand("theorem2", "rank <= n+3 instance on K_{n,n} minus a matching");
  std::string t2_theta = "1/2";
  std::size_t t2_n = 5;
  std::string t2_sign = "+";
  t2_cmd->add_option("--theta", t2_theta, "theta in (0,1)")->capture_default_str();
  t2_cmd->add_option("--n", t2_n, "part size")->check(CLI::PositiveNumber)->capture_default_str();
  t2_cmd->add_option("--sign", t2_sign, "root choice + or -")
      ->check(CLI::IsMember({"+", "-"}))
      ->capture_default_str();
  t2_cmd->callback([&] {
    action = [&] {
      const auto inst = theorem2_instance(parse_theta(t2_theta), t2_n,
                                          t2_sign == "+" ? RootSign::Plus : RootSign::Minus);
      Report r;
      r.result = {{"theta", inst.theta.to_string()},
                  {"n", inst.n},
                  {"sign", t2_sign},
                  {"beta", to_string(inst.beta)},
                  {"report", io::to_json(inst.report)},
                  {"rank_bound", inst.n + 3},
                  {"bound_holds", inst.report.exact_rank <= inst.n + 3}};
      r.verified = inst.report.holds() && inst.report.exact_rank <= inst.n + 3;
      std::visit([&](const auto& m) { r.csv = matrix_csv(m); }, inst.matrix);
      return r;
    };
  });

  // hadamard
  auto* had_cmd = app.add_subcommand("hadamard", "Hadamard matrices");
  std::string had_kind = "sylvester";
  std::uint64_t had_param = 3;
  had_cmd->add_option("--kind", had_kind, "sylvester (param k), paley (param q), catalog (param order)")
      ->check(CLI::IsMember({"sylvester", "paley", "catalog"}))
      ->capture_default_str();
  had_cmd->add_option("--param", had_param, "k, q or order")->capture_default_str();
  had_cmd->callback([&] {
    action = [&] {
      std::optional<HadamardMatrix> h;
      if (had_kind == "sylvester") {
        if (had_param > 12) throw UnsupportedParameter("sylvester order capped at 2^12");
        h = sylvester(had_param);
      } else if (had_kind == "paley") {
        h = paley(had_param);
      } else {
        h = catalog_hadamard(had_param);
        if (!h) throw UnsupportedParameter("no catalog Hadamard matrix of order " + std::to_string(had_param));
      }
      Report r;
      r.result = hadamard_json(*h);
      r.csv = matrix_csv(h->entries());
      return r;
    };
  });

  // design
  auto* des_cmd = app.add_subcommand("design", "symmetric designs and their incidence graphs");
  std::string des_name = "fano";
  std::string des_file;
  bool des_complement = false;
  des_cmd->add_option("--design", des_name, "fano, fano-complement, paley:Q, sylvester:K")
      ->capture_default_str();
  des_cmd->add_option("--in", des_file, "design JSON file");
  des_cmd->add_flag("--complement", des_complement, "take the complementary design");
  des_cmd->callback([&] {
    action = [&] {
      SymmetricDesign d = des_file.empty() ? named_design(des_name)
                                           : io::design_from_json(read_json(des_file));
      if (des_complement) d = complement_design(d);
      const auto g = incidence_bigraph(d);
      Report r;
      r.result = {{"design", io::to_json(d)},
                  {"order", d.k() - d.lambda()},
                  {"incidence_graph",
                   {{"vertices", g.order()},
                    {"edges", g.edge_count()},
                    {"max_degree", g.max_degree()},
                    {"connected", g.is_connected()}}}};
      std::ostringstream os;
      for (const auto& b : d.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i] + 1;
        os << '\n';
      }
      r.csv = os.str();
      return r;
    };
  });

  // design-rank
  auto* dr_cmd = app.add_subcommand("design-rank", "rank of the design matrix M_Delta");
  std::string dr_name = "fano";
  std::string dr_file;
  std::size_t dr_copies = 1;
  PairOptions dr_pair;
  dr_pair.attach(dr_cmd);
  dr_cmd->add_option("--design", dr_name, "fano, fano-complement, paley:Q, sylvester:K")
      ->capture_default_str();
  dr_cmd->add_option("--in", dr_file, "design JSON file");
  dr_cmd->add_option("--copies", dr_copies, "disjoint copies of the incidence graph")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  dr_cmd->callback([&] {
    action = [&] {
      const SymmetricDesign d =
          dr_file.empty() ? named_design(dr_name) : io::design_from_json(read_json(dr_file));
      return dr_pair.visit([&](const auto& p) {
        using F = std::decay_t<decltype(p.alpha)>;
        const auto rep = dr_copies == 1 ? design_rank_instance(d, p)
                                        : rank_sandwich(p, replicate_bigraph(incidence_bigraph(d), dr_copies));
        const F mu2 = mu_squared(p);
        const F order(Rational(static_cast<long>(d.k() - d.lambda())));
        Report r;
        r.result = {{"design", {{"v", d.v()}, {"k", d.k()}, {"lambda", d.lambda()}}},
                    {"copies", dr_copies},
                    {"pair", io::to_json(p)},
                    {"mu_squared_equals_order", mu2 == order},
                    {"report", io::to_json(rep)}};
        r.verified = rep.holds();
        if (dr_copies == 1) {
          const long v = static_cast<long>(d.v());
          const long rk = static_cast<long>(rep.exact_rank);
          const bool low = rk <= v + 3;
          const bool dichotomy = (low || rk >= 2 * v - 3) && low == (mu2 == order);
          r.result["low_rank"] = low;
          r.result["dichotomy_holds"] = dichotomy;
          r.verified = r.verified && dichotomy;
        } else if (d.v() == 7 && mu2 == order) {
          const bool within = rep.exact_rank <= 8 * dr_copies + 2;
          r.result["replicated_bound"] = 8 * dr_copies + 2;
          r.result["within_replicated_bound"] = within;
          r.verified = r.verified && within;
        }
        return r;
      });
    };
  });

  // onebytwo
  auto* ob_cmd = app.add_subcommand("onebytwo", "coprime alpha<beta with alpha*beta = t*(alpha-beta)^2");
  std::uint64_t ob_target = 2;
  std::uint64_t ob_bound = 100;
  ob_cmd->add_option("--k-minus-lambda", ob_target, "t = k - lambda")->capture_default_str();
  ob_cmd->add_option("--bound", ob_bound, "largest beta")->capture_default_str();
  add_threads(ob_cmd);
  ob_cmd->callback([&] {
    action = [&] {
      const auto sols = onebytwo_scan(ob_target, ob_bound, threads);
      json list = json::array();
      std::ostringstream os;
      os << "alpha,beta\n";
      for (const auto& s : sols) {
        list.push_back({s.alpha, s.beta});
        os << s.alpha << ',' << s.beta << '\n';
      }
      Report r;
      r.result = {{"k_minus_lambda", ob_target}, {"bound", ob_bound}, {"solutions", list}};
      r.csv = os.str();
      return r;
    };
  });

  // family-check
  auto* fc_cmd = app.add_subcommand("family-check", "theta-intersecting check and family matrix");
  std::string fc_file;
  std::string fc_theta = "1/2";
  fc_cmd->add_option("--in", fc_file, "family JSON file")->required();
  fc_cmd->add_option("--theta", fc_theta, "theta in (0,1)")->capture_default_str();
  fc_cmd->callback([&] {
    action = [&] {
      const auto f = io::family_from_json(read_json(fc_file));
      const Rational theta = parse_theta(fc_theta);
      const auto check = is_theta_intersecting(f, theta);
      Report r;
      r.result = theta_check_json(f, check);
      r.result["size"] = f.size();
      r.result["n"] = f.ground_size();
      r.result["set_sizes"] = f.distinct_sizes();
      r.result["baseline"] = f.ground_size() >= 2 ? 3 * f.ground_size() / 2 - 2 : 0;
      if (check.ok) {
        const auto m = family_matrix(f, theta);
        r.result["matrix_rank"] = rank(m);
        if (f.distinct_sizes().size() == 2) {
          const auto fg = family_bigraph(f, theta);
          const Rational mu2 = mu_squared(fg.pair);
          r.result["mu_squared"] = mu2.to_string();
          if (!mu2.is_zero()) r.result["nu"] = bigraph_multiplicity(fg.graph, mu2);
        }
        r.csv = matrix_csv(m);
      }
      r.verified = check.ok;
      return r;
    };
  });

  // family-build
  auto* fb_cmd = app.add_subcommand("family-build", "named bisection-closed families");
  std::string fb_kind = "sunflower";
  std::size_t fb_n = 8;
  fb_cmd->add_option("--kind", fb_kind, "sunflower, fano, hadamard")
      ->check(CLI::IsMember({"sunflower", "fano", "hadamard"}))
      ->capture_default_str();
  fb_cmd->add_option("--n", fb_n, "ground set size (Hadamard order)")->capture_default_str();
  fb_cmd->callback([&] {
    action = [&] {
      SetFamily f;
      if (fb_kind == "sunflower") {
        f = sunflower_family(fb_n);
      } else if (fb_kind == "fano") {
        f = fano_family();
      } else {
        const auto h = catalog_hadamard(fb_n);
        if (!h) throw UnsupportedParameter("no catalog Hadamard matrix of order " + std::to_string(fb_n));
        f = hadamard_family(*h);
      }
      Report r;
      r.result = {{"family", io::to_json(f)},
                  {"size", f.size()},
                  {"theta_intersecting", is_theta_intersecting(f, Rational::reduce(1, 2)).ok}};
      r.verified = r.result["theta_intersecting"].get<bool>();
      return r;
    };
  });

  // family-search
  auto* fs_cmd = app.add_subcommand("family-search", "improve a bisection-closed family over [n]");
  std::size_t fs_n = 10;
  std::string fs_seed = "sunflower";
  std::string fs_seed_file;
  double fs_budget = 60.0;
  std::size_t fs_max_size = 0;
  std::size_t fs_max_drop = 3;
  fs_cmd->add_option("--n", fs_n, "ground set size (<= 20)")->capture_default_str();
  fs_cmd->add_option("--seed-family", fs_seed, "sunflower or fano")
      ->check(CLI::IsMember({"sunflower", "fano"}))
      ->capture_default_str();
  fs_cmd->add_option("--seed-file", fs_seed_file, "seed family JSON file");
  fs_cmd->add_option("--time-budget", fs_budget, "seconds")->capture_default_str();
  fs_cmd->add_option("--max-set-size", fs_max_size, "largest candidate set (0: n)")
      ->capture_default_str();
  fs_cmd->add_option("--max-drop", fs_max_drop, "largest number of sets exchanged at once")
      ->capture_default_str();
  add_threads(fs_cmd);
  fs_cmd->callback([&] {
    action = [&] {
      SetFamily seed;
      if (!fs_seed_file.empty()) {
        seed = io::family_from_json(read_json(fs_seed_file));
      } else if (fs_seed == "fano") {
        seed = fano_family();
      } else {
        seed = sunflower_family(fs_n % 2 == 0 ? fs_n : fs_n - 1);
      }
      SearchOptions opts;
      opts.time_budget = std::chrono::milliseconds(static_cast<long long>(fs_budget * 1000.0));
      opts.max_set_size = fs_max_size;
      opts.max_drop = fs_max_drop;
      opts.threads = threads;
      const auto res = search_bisection_closed(fs_n, seed, opts);
      const std::size_t baseline = 3 * fs_n / 2 - 2;
      Report r;
      r.result = {{"family", io::to_json(res.family)},
                  {"seed_size", seed.size()},
                  {"size", res.family.size()},
                  {"baseline", baseline},
                  {"beats_baseline", res.family.size() > baseline},
                  {"improvements", res.improvements},
                  {"budget_exhausted", res.budget_exhausted}};
      return r;
    };
  });

  // random-rank-stats
  auto* rr_cmd = app.add_subcommand("random-rank-stats", "ranks of random tournament matrices");
  std::size_t rr_n = 30;
  std::size_t rr_samples = 50;
  std::uint64_t rr_seed = 1;
  std::string rr_theta = "1/2";
  rr_cmd->add_option("--n", rr_n, "matrix size")->check(CLI::PositiveNumber)->capture_default_str();
  rr_cmd->add_option("--samples", rr_samples, "number of tournaments")->capture_default_str();
  rr_cmd->add_option("--seed", rr_seed, "master seed")->capture_default_str();
  rr_cmd->add_option("--theta", rr_theta, "theta of f_theta")->capture_default_str();
  add_threads(rr_cmd);
  rr_cmd->callback([&] {
    action = [&] {
      const auto f = PairFunction<Rational>::linear(parse_theta(rr_theta));
      std::vector<Rational> a;
      for (std::size_t i = 1; i <= rr_n; ++i) a.emplace_back(static_cast<long>(i));
      std::vector<std::size_t> ranks(rr_samples);
      auto work = [&](std::size_t id) {
        for (std::size_t s = id; s < rr_samples; s += threads)
          ranks[s] = rank(matrix_from_tournament<Rational>(f, a, random_tournament(rr_n, split_seed(rr_seed, s))));
      };
      {
        std::vector<std::jthread> pool;
        for (std::size_t id = 0; id < std::min(threads, rr_samples); ++id) pool.emplace_back(work, id);
      }
      json hist = json::object();
      std::size_t high = 0;
      for (std::size_t rk : ranks) {
        const std::string key = std::to_string(rk);
        hist[key] = hist.value(key, 0) + 1;
        if (rk + 1 >= rr_n) ++high;
      }
      Report r;
      r.result = {{"ranks", ranks},
                  {"histogram", hist},
                  {"at_least_n_minus_1", high},
                  {"fraction_at_least_n_minus_1",
                   rr_samples == 0 ? 0.0 : static_cast<double>(high) / static_cast<double>(rr_samples)}};
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  json config = {{"command", sub->get_name()}};
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || (name == "threads" && opt->count() == 0)) continue;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      config[name] = opt->get_type_size() == 0 ? json(true)
                     : res.size() == 1          ? json(res.front())
                                                : json(res);
    } else if (!opt->get_default_str().empty()) {
      config[name] = opt->get_default_str();
    }
  }

  Report report;
  try {
    report = action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid number: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string body;
  if (format == "csv") {
    body = report.csv ? *report.csv : summary_csv(report.result);
  } else {
    const json doc = {{"config", config}, {"result", report.result}, {"verified", report.verified}};
    body = doc.dump(2) + "\n";
  }
  if (out_path.empty()) {
    out << body;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    file << body;
  }
  if (!report.verified) {
    err << "verification failed\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace symrank::cli
