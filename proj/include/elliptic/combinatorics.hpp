#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elliptic/bigint.hpp"

namespace elliptic {

// ---------------------------------------------------------------------------
// Exact integer sequences
// ---------------------------------------------------------------------------

BigInt binomial(std::size_t n, std::size_t k);

// C_n = binom(2n, n) / (n + 1).
BigInt catalan(std::size_t n);

/// Catalan triangle C(n, k) for n, k >= 1:
///   C(n, 1) = 1,  C(n, k) = C(n, k-1) + C(n-1, k),  C(n, k) = 0 for k > n.
/// Evaluated through the ballot closed form (n-k+1)/n * binom(n+k-2, n-1).
/// Throws std::invalid_argument when n or k is zero.
BigInt catalan_triangle(std::size_t n, std::size_t k);

/// Rows 1..n_max of the Catalan triangle built from the additive recursion.
/// Entry [n][k] is C(n, k); index 0 of each axis is unused and zero.
std::vector<std::vector<BigInt>> catalan_triangle_table(std::size_t n_max);

/// Number of admissible mixed-pair placements on a block of 2t equal
/// letters carrying 2k mixed pairs:
///   B(k, t) = (2k+1)/(t+k+1) * binom(2t, t+k)  for k <= t, else 0.
BigInt ballot_b(std::size_t k, std::size_t t);

/// B(k, t) evaluated by the double-sum recursion
///   B(k, t) = sum_{r=k}^{t} C_{t-r} sum_{s=k}^{r} C_{r-s} B(k-1, s-1),
/// with B(0, t) = C_t. Memoised; exact.
BigInt ballot_b_recursive(std::size_t k, std::size_t t);

/// Odd-block analogue 2(k+1)/(t+k+2) * binom(2t+1, t+k+1), the number of
/// placements of 2k+1 mixed pairs on a block of 2t+1 letters.
BigInt ballot_b_odd(std::size_t k, std::size_t t);

enum class Parity { even, odd };

/// |NC2^l(n, m)| for the block word X^n (X^dagger)^m with
///   even:  n = 2u, m = 2v, l = 2k
///   odd:   n = 2u+1, m = 2v+1, l = 2k+1.
/// Requires k <= min(u, v).
BigInt rank_cardinality_closed(std::size_t u, std::size_t v, std::size_t k, Parity parity);

// ---------------------------------------------------------------------------
// Words and pairings
// ---------------------------------------------------------------------------

enum class Letter : std::uint8_t { plain, dagger };

/// A product X^{e_1} ... X^{e_L} with e_i in {1, dagger}. Text form uses
/// 'x' for X and 'd' for X^dagger.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word parse(std::string_view text);
  static Word block(std::size_t plain, std::size_t dagger);
  /// X^{n_1} (X^dagger)^{m_1} ... X^{n_k} (X^dagger)^{m_k}.
  static Word from_blocks(std::span<const std::size_t> plain, std::span<const std::size_t> dagger);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t count(Letter letter) const;

  /// Cyclic left shift: letter t becomes the first letter.
  Word rotated(std::size_t t) const;
  Word letters_swapped() const;
  /// Word of the adjoint product: reversed order, every letter flipped.
  Word conjugated() const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Pair {
  std::size_t lo;  // 1-based, lo < hi
  std::size_t hi;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Perfect matching of {1..L}. Construction validates that every index is
/// covered exactly once; non-crossing is a separate query.
class Pairing {
 public:
  Pairing(std::size_t ground_size, std::vector<Pair> pairs);
  /// From a 0-based partner table: partner[i] is the index matched with i.
  static Pairing from_partners(std::span<const std::size_t> partner);

  std::size_t ground_size() const noexcept { return ground_size_; }
  std::span<const Pair> pairs() const noexcept { return pairs_; }
  std::size_t partner(std::size_t index) const;  // 1-based
  bool is_non_crossing() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  std::size_t ground_size_;
  std::vector<Pair> pairs_;        // sorted by lo
  std::vector<std::size_t> mate_;  // 1-based, mate_[0] unused
};

std::size_t sigma_same(const Word& word, const Pairing& pairing);
std::size_t sigma_mixed(const Word& word, const Pairing& pairing);

// ---------------------------------------------------------------------------
// Exhaustive enumeration of NC2(L)
// ---------------------------------------------------------------------------

inline constexpr std::size_t default_enumeration_ceiling = 24;

/// Largest L accepted by exhaustive operations. Reads
/// ELLIPTIC_MOMENTS_MAX_L when set (must be a positive integer).
std::size_t enumeration_ceiling();

/// Throws CapacityError when length exceeds enumeration_ceiling().
void require_enumerable(std::size_t length);

/// Visitor receives the 0-based partner table of one pairing. The span is
/// only valid for the duration of the call.
using PairingVisitor = std::function<void(std::span<const std::size_t>)>;

/// Visits every non-crossing pairing of {1..L} once. Odd L visits nothing.
void for_each_nc_pairing(std::size_t length, const PairingVisitor& visit);

/// Number of independent branches of NC2(L): the choices of partner for the
/// first index (L/2 for even L, 0 for odd L).
std::size_t nc_branch_count(std::size_t length);

/// Visits the pairings whose first index is matched with index 2*branch + 2
/// (1-based). Branches partition NC2(L); each may run on its own thread.
void for_each_nc_pairing_in_branch(std::size_t length, std::size_t branch,
                                   const PairingVisitor& visit);

std::vector<Pairing> enumerate_nc_pairings(std::size_t length);

/// Census of NC2(word) by number of mixed pairs. Keys cover every l with
/// l = #plain (mod 2) and l <= min(#plain, #dagger), plus any other l with a
/// non-zero count (there are none; the census is exhaustive).
std::map<std::size_t, BigInt> rank_census(const Word& word);

}  // namespace elliptic
