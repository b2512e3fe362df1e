#pragma once

#include <cstddef>
#include <vector>

#include "elliptic/bigint.hpp"
#include "elliptic/combinatorics.hpp"
#include "elliptic/polynomial.hpp"

namespace elliptic {

/// Positions (1-based, strictly increasing) of the X factors in a word of
/// length 2M; every other factor is X^dagger.
struct PositionTuple {
  std::size_t M = 0;
  std::vector<std::size_t> positions;

  /// Throws std::invalid_argument unless M >= 1 and positions are strictly
  /// increasing inside 1..2M.
  void validate() const;
  std::size_t k() const noexcept { return positions.size(); }
  std::size_t even_count() const noexcept;
  std::size_t odd_count() const noexcept { return k() - even_count(); }
  /// k <= M and at least as many odd as even positions.
  bool is_canonical() const noexcept;

  friend bool operator==(const PositionTuple&, const PositionTuple&) = default;
};

/// Position 2e in the tuple contributes e to evens; odd position 2o-1
/// contributes o to odds_present; odd slots absent from the tuple give
/// odds_missing.
struct EvenOddSplit {
  std::vector<std::size_t> evens;
  std::vector<std::size_t> odds_present;
  std::vector<std::size_t> odds_missing;
};

EvenOddSplit split_even_odd(const PositionTuple& t);

enum class Transform {
  letter_swap,  // X <-> X^dagger: positions replaced by their complement
  rotate        // cyclic shift i -> i + 1, with 2M -> 1
};

struct CanonicalForm {
  PositionTuple tuple;
  std::vector<Transform> transforms;  // in the order applied
};

CanonicalForm canonicalize(std::size_t M, std::vector<std::size_t> positions);
CanonicalForm canonicalize(const PositionTuple& t);

/// Applies one transform to a tuple (no canonical-form requirement).
PositionTuple apply_transform(const PositionTuple& t, Transform transform);

Word word_from_positions(const PositionTuple& t);

/// |A_{e,l}|: pairings of 2M points containing the chord (2e, 2l-1).
BigInt pair_block_cardinality(std::size_t e, std::size_t ell, std::size_t M);

/// Relative order of two evens e1 < e2 and two odds o1 < o2, with "o <= e"
/// meaning 2o - 1 precedes 2e.
enum class OrderingCase {
  odds_before_evens,        // o1 < o2 <= e1 < e2
  interleaved_odd_first,    // o1 <= e1 < o2 <= e2
  odds_enclose_evens,       // o1 <= e1 < e2 < o2
  evens_enclose_odds,       // e1 < o1 < o2 <= e2
  interleaved_even_first,   // e1 < o1 <= e2 < o2
  evens_before_odds         // e1 < e2 < o1 < o2
};

OrderingCase classify_ordering(std::size_t e1, std::size_t o1, std::size_t e2, std::size_t o2);

/// |A_{e1,o_a} ∩ A_{e2,o_b}|. Requires e1 < e2, o_a != o_b, all in 1..M.
BigInt pair_intersection_cardinality(std::size_t e1, std::size_t o_a, std::size_t e2,
                                     std::size_t o_b, std::size_t M);

/// Number of even X positions above which positional_moment stops using
/// closed forms and enumerates instead.
inline constexpr std::size_t max_closed_form_evens = 2;

/// phi(P(i)) for any valid tuple. Canonicalizes first; closed forms for up to
/// two even positions, the exhaustive oracle beyond (CapacityError if 2M is
/// above the enumeration ceiling).
MomentPolynomial positional_moment(const PositionTuple& t);

/// The balanced (k = M) formulas written directly in terms of the missing
/// odd slots. Requires a canonical tuple with k = M and at most two evens.
MomentPolynomial positional_moment_balanced(const PositionTuple& t);

/// Constant term of positional_moment: the Ginibre moment. Zero unless k = M.
BigInt ginibre_moment(const PositionTuple& t);

}  // namespace elliptic
