#pragma once

#include <cstddef>

#include "elliptic/bigint.hpp"
#include "elliptic/combinatorics.hpp"
#include "elliptic/polynomial.hpp"

namespace elliptic {

/// Sum over NC2(L) of rho^sigma(pi). Exhaustive; throws CapacityError when
/// the word is longer than enumeration_ceiling(). Odd lengths give zero.
MomentPolynomial word_moment_oracle(const Word& word);

/// Closed form of phi(X^n (X^dagger)^m) from the rank cardinalities; never
/// enumerates.
MomentPolynomial block_moment(std::size_t n, std::size_t m);

enum class Ensemble { goe, anti_goe, ginibre };

/// block_moment(n, m) at rho = 1, -1 or 0 from the Catalan shortcuts.
BigInt special_value(std::size_t n, std::size_t m, Ensemble which);

}  // namespace elliptic
