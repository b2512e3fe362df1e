#include "elliptic/moments.hpp"

#include <algorithm>

namespace elliptic {

MomentPolynomial word_moment_oracle(const Word& word) {
  MomentPolynomial poly;
  if (word.size() % 2 != 0) return poly;
  std::size_t pairs = word.size() / 2;
  for (const auto& [mixed, count] : rank_census(word)) poly.add_term(pairs - mixed, count);
  return poly;
}

MomentPolynomial block_moment(std::size_t n, std::size_t m) {
  MomentPolynomial poly;
  if (n % 2 != m % 2) return poly;
  std::size_t u = n / 2;
  std::size_t v = m / 2;
  Parity parity = n % 2 == 0 ? Parity::even : Parity::odd;
  for (std::size_t k = 0; k <= std::min(u, v); ++k) {
    poly.add_term(u + v - 2 * k, rank_cardinality_closed(u, v, k, parity));
  }
  return poly;
}

BigInt special_value(std::size_t n, std::size_t m, Ensemble which) {
  if (n % 2 != m % 2) return 0;
  std::size_t half = (n + m) / 2;
  switch (which) {
    case Ensemble::goe:
      return catalan(half);
    case Ensemble::anti_goe: {
      // Every exponent has the parity of half - (n mod 2).
      BigInt c = catalan(half);
      return (half - n % 2) % 2 == 0 ? c : BigInt(-c);
    }
    case Ensemble::ginibre:
      return n == m ? 1 : 0;
  }
  return 0;
}

}  // namespace elliptic
