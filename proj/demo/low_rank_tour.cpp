// Walks through a few low-rank instances: a random tournament matrix, the
// Fano plane incidence graph, and a bisection-closed family.

#include <iostream>

#include "symrank/symrank.hpp"

using namespace symrank;

int main() {
  const Rational half = Rational::reduce(1, 2);

  std::vector<Rational> a;
  for (long i = 1; i <= 12; ++i) a.emplace_back(i);
  const auto t = random_tournament(a.size(), 7);
  const auto mt = matrix_from_tournament<Rational>(PairFunction<Rational>::linear(half), a, t);
  std::cout << "random tournament, n = 12: rank " << rank(mt) << '\n';

  const auto p = TwoValuePair<Rational>::linear(half, Rational(1), Rational(2));
  const auto fano_report = design_rank_instance(fano(), p);
  std::cout << "Fano plane, alpha = 1, beta = 2: mu^2 = " << to_string(fano_report.mu_squared)
            << ", nu = " << fano_report.nu << ", rank " << fano_report.exact_rank << " in ["
            << fano_report.rank_lower << ", " << fano_report.rank_upper << "] for a "
            << fano_report.m + fano_report.n << "x" << fano_report.m + fano_report.n << " matrix\n";

  const auto inst = theorem2_instance(half, 20, RootSign::Plus);
  std::cout << "K_{20,20} minus a matching, beta = " << to_string(inst.beta) << ": rank "
            << inst.report.exact_rank << " for a 40x40 matrix\n";

  const auto family = fano_family();
  const auto fg = family_bigraph(family, half);
  std::cout << "family over [8] with " << family.size() << " sets: rank "
            << rank(family_matrix(family, half)) << ", incidence graph isomorphic to Heawood: "
            << (isomorphic(fg.graph, incidence_bigraph(fano())) ? "yes" : "no") << '\n';
}
