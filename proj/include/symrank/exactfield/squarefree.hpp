#pragma once

#include <cstdint>

#include "symrank/error.hpp"
#include "symrank/exactfield/rational.hpp"

namespace symrank {

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

/// n = square * square * core, with core square-free.
struct SquareFreeSplit {
  BigInt square;
  BigInt core;
};

/// Square-free decomposition of a positive integer by trial division with
/// primes up to `trial_bound`. Any cofactor left after trial division is
/// either 1, a prime, a prime squared, or a product of two distinct primes as
/// long as it is below trial_bound^3; beyond that the factorization cannot be
/// certified and the input is rejected.
inline SquareFreeSplit square_free_split(const BigInt& n,
                                         std::uint64_t trial_bound = kDefaultTrialBound) {
  if (n <= 0) throw PreconditionError("square-free split needs a positive integer");
  SquareFreeSplit out{1, 1};
  BigInt rest = n;
  auto strip = [&](unsigned long p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) out.square *= p;
    if (count % 2 == 1) out.core *= p;
  };
  strip(2);
  std::uint64_t p = 3;
  for (; p <= trial_bound; p += 2) {
    if (BigInt(static_cast<unsigned long>(p)) * p > rest) break;
    strip(static_cast<unsigned long>(p));
  }
  if (rest == 1) return out;
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    out.square *= root;
    return out;
  }
  const BigInt bound(static_cast<unsigned long>(trial_bound));
  if (p > trial_bound && rest >= bound * bound * bound) {
    throw UnsupportedParameter("integer too large for square-free decomposition: " + n.get_str());
  }
  out.core *= rest;
  return out;
}

inline bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace symrank
