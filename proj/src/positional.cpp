#include "elliptic/positional.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "elliptic/errors.hpp"
#include "elliptic/moments.hpp"

namespace elliptic {

void PositionTuple::validate() const {
  if (M == 0) throw std::invalid_argument("positions: M must be >= 1");
  std::size_t prev = 0;
  for (std::size_t p : positions) {
    if (p <= prev || p > 2 * M) {
      throw std::invalid_argument("positions: expected strictly increasing values in 1.." +
                                  std::to_string(2 * M));
    }
    prev = p;
  }
}

std::size_t PositionTuple::even_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(positions.begin(), positions.end(), [](std::size_t p) { return p % 2 == 0; }));
}

bool PositionTuple::is_canonical() const noexcept {
  return k() <= M && odd_count() >= even_count();
}

EvenOddSplit split_even_odd(const PositionTuple& t) {
  EvenOddSplit s;
  std::vector<bool> odd_seen(t.M + 1, false);
  for (std::size_t p : t.positions) {
    if (p % 2 == 0) {
      s.evens.push_back(p / 2);
    } else {
      s.odds_present.push_back((p + 1) / 2);
      odd_seen[(p + 1) / 2] = true;
    }
  }
  for (std::size_t o = 1; o <= t.M; ++o) {
    if (!odd_seen[o]) s.odds_missing.push_back(o);
  }
  return s;
}

PositionTuple apply_transform(const PositionTuple& t, Transform transform) {
  PositionTuple out{t.M, {}};
  std::size_t L = 2 * t.M;
  if (transform == Transform::letter_swap) {
    std::vector<bool> taken(L + 1, false);
    for (std::size_t p : t.positions) taken[p] = true;
    for (std::size_t p = 1; p <= L; ++p) {
      if (!taken[p]) out.positions.push_back(p);
    }
  } else {
    for (std::size_t p : t.positions) out.positions.push_back(p == L ? 1 : p + 1);
    std::sort(out.positions.begin(), out.positions.end());
  }
  return out;
}

CanonicalForm canonicalize(const PositionTuple& t) {
  t.validate();
  CanonicalForm form{t, {}};
  if (form.tuple.k() > t.M) {
    form.tuple = apply_transform(form.tuple, Transform::letter_swap);
    form.transforms.push_back(Transform::letter_swap);
  }
  if (form.tuple.even_count() > form.tuple.odd_count()) {
    form.tuple = apply_transform(form.tuple, Transform::rotate);
    form.transforms.push_back(Transform::rotate);
  }
  return form;
}

CanonicalForm canonicalize(std::size_t M, std::vector<std::size_t> positions) {
  return canonicalize(PositionTuple{M, std::move(positions)});
}

Word word_from_positions(const PositionTuple& t) {
  std::vector<Letter> letters(2 * t.M, Letter::dagger);
  for (std::size_t p : t.positions) {
    if (p == 0 || p > letters.size()) throw std::invalid_argument("positions: index out of range");
    letters[p - 1] = Letter::plain;
  }
  return Word(std::move(letters));
}

namespace {

using Index = long long;

BigInt cat(Index n) {
  if (n < 0) throw std::logic_error("positional: negative Catalan index");
  return catalan(static_cast<std::size_t>(n));
}

void require_range(std::size_t value, std::size_t M, const char* what) {
  if (value == 0 || value > M) {
    throw std::invalid_argument(std::string("positional: ") + what + " must lie in 1..M");
  }
}

}  // namespace

BigInt pair_block_cardinality(std::size_t e, std::size_t ell, std::size_t M) {
  require_range(e, M, "e");
  require_range(ell, M, "ell");
  Index E = static_cast<Index>(e), l = static_cast<Index>(ell), m = static_cast<Index>(M);
  if (l <= E) return cat(E - l) * cat(m - E + l - 1);
  return cat(l - E - 1) * cat(m - l + E);
}

OrderingCase classify_ordering(std::size_t e1, std::size_t o1, std::size_t e2, std::size_t o2) {
  if (!(e1 < e2) || !(o1 < o2)) {
    throw std::invalid_argument("classify_ordering: expects e1 < e2 and o1 < o2");
  }
  if (o1 <= e1) {
    if (o2 <= e1) return OrderingCase::odds_before_evens;
    if (o2 <= e2) return OrderingCase::interleaved_odd_first;
    return OrderingCase::odds_enclose_evens;
  }
  if (o1 <= e2) {
    if (o2 <= e2) return OrderingCase::evens_enclose_odds;
    return OrderingCase::interleaved_even_first;
  }
  return OrderingCase::evens_before_odds;
}

BigInt pair_intersection_cardinality(std::size_t e1, std::size_t o_a, std::size_t e2,
                                     std::size_t o_b, std::size_t M) {
  require_range(e1, M, "e1");
  require_range(e2, M, "e2");
  require_range(o_a, M, "o_a");
  require_range(o_b, M, "o_b");
  if (!(e1 < e2)) throw std::invalid_argument("pair_intersection_cardinality: requires e1 < e2");
  if (o_a == o_b) throw std::invalid_argument("pair_intersection_cardinality: requires o_a != o_b");

  // direct: chords (2e1, 2o1-1) and (2e2, 2o2-1); otherwise the odds are swapped.
  bool direct = o_a < o_b;
  std::size_t lo = std::min(o_a, o_b), hi = std::max(o_a, o_b);
  Index a = static_cast<Index>(e1), b = static_cast<Index>(e2);
  Index o1 = static_cast<Index>(lo), o2 = static_cast<Index>(hi);
  Index m = static_cast<Index>(M);

  switch (classify_ordering(e1, lo, e2, hi)) {
    case OrderingCase::odds_before_evens:
      if (direct) return 0;
      return cat(a - o2) * cat(b - a + o2 - o1 - 1) * cat(m - b + o1 - 1);
    case OrderingCase::interleaved_odd_first:
      if (direct) return cat(a - o1) * cat(b - o2) * cat(m - a - b + o1 + o2 - 2);
      return cat(o2 - a - 1) * cat(b + a - o1 - o2) * cat(m - b + o1 - 1);
    case OrderingCase::odds_enclose_evens:
      if (!direct) return 0;
      return cat(a - o1) * cat(o2 - b - 1) * cat(m - o2 + b - a + o1 - 1);
    case OrderingCase::evens_enclose_odds:
      if (!direct) return 0;
      return cat(o1 - a - 1) * cat(b - o2) * cat(m - b + o2 + a - o1 - 1);
    case OrderingCase::interleaved_even_first:
      if (direct) return cat(o1 - a - 1) * cat(o2 - b - 1) * cat(m - o1 + a - o2 + b);
      return cat(b - o1) * cat(o2 + o1 - b - a - 2) * cat(m - o2 + a);
    case OrderingCase::evens_before_odds:
      if (direct) return 0;
      return cat(o1 - b - 1) * cat(o2 - o1 + b - a - 1) * cat(m - o2 + a);
  }
  return 0;
}

namespace {

// rho^shift * sum_j N[j] rho^{2j}
MomentPolynomial assemble(std::size_t shift, const std::vector<BigInt>& n) {
  MomentPolynomial poly;
  for (std::size_t j = 0; j < n.size(); ++j) poly.add_term(shift + 2 * j, n[j]);
  return poly;
}

MomentPolynomial moment_no_even(std::size_t M, std::size_t k) {
  return MomentPolynomial::monomial(M - k, catalan(M));
}

MomentPolynomial moment_one_even(std::size_t M, std::size_t k, const EvenOddSplit& s) {
  std::size_t e = s.evens[0];
  BigInt n0 = 0;
  for (std::size_t o : s.odds_missing) n0 += pair_block_cardinality(e, o, M);
  return assemble(M - k, {n0, catalan(M) - n0});
}

MomentPolynomial moment_two_evens(std::size_t M, std::size_t k, const EvenOddSplit& s) {
  std::size_t e1 = s.evens[0], e2 = s.evens[1];
  const auto& miss = s.odds_missing;
  BigInt single = 0;  // sum of |A_{e,o}| over both evens and missing o
  BigInt both = 0;    // pairings with both evens matched to missing odds
  for (std::size_t o : miss) single += pair_block_cardinality(e1, o, M) + pair_block_cardinality(e2, o, M);
  for (std::size_t i = 0; i < miss.size(); ++i) {
    for (std::size_t j = i + 1; j < miss.size(); ++j) {
      both += pair_intersection_cardinality(e1, miss[i], e2, miss[j], M);
      both += pair_intersection_cardinality(e1, miss[j], e2, miss[i], M);
    }
  }
  BigInt n0 = both;
  BigInt n1 = single - 2 * both;
  BigInt n2 = catalan(M) - single + both;
  return assemble(M - k, {n0, n1, n2});
}

}  // namespace

MomentPolynomial positional_moment(const PositionTuple& t) {
  CanonicalForm form = canonicalize(t);
  const PositionTuple& c = form.tuple;
  EvenOddSplit s = split_even_odd(c);
  switch (s.evens.size()) {
    case 0: return moment_no_even(c.M, c.k());
    case 1: return moment_one_even(c.M, c.k(), s);
    case 2: return moment_two_evens(c.M, c.k(), s);
    default: break;
  }
  std::size_t ceiling = enumeration_ceiling();
  if (2 * c.M > ceiling) {
    throw CapacityError(2 * c.M, ceiling,
                        "closed forms cover at most two even positions; this tuple has " +
                            std::to_string(s.evens.size()) + " after canonicalization");
  }
  return word_moment_oracle(word_from_positions(c));
}

MomentPolynomial positional_moment_balanced(const PositionTuple& t) {
  t.validate();
  if (t.k() != t.M || !t.is_canonical()) {
    throw std::invalid_argument("positional_moment_balanced: requires a canonical tuple with k = M");
  }
  EvenOddSplit s = split_even_odd(t);
  std::size_t M = t.M;
  switch (s.evens.size()) {
    case 0:
      return MomentPolynomial::monomial(0, catalan(M));
    case 1: {
      // exactly one odd slot is free
      BigInt g = pair_block_cardinality(s.evens[0], s.odds_missing[0], M);
      return assemble(0, {g, catalan(M) - g});
    }
    case 2: {
      std::size_t e1 = s.evens[0], e2 = s.evens[1];
      std::size_t o1 = s.odds_missing[0], o2 = s.odds_missing[1];
      BigInt a11 = pair_block_cardinality(e1, o1, M), a12 = pair_block_cardinality(e1, o2, M);
      BigInt a21 = pair_block_cardinality(e2, o1, M), a22 = pair_block_cardinality(e2, o2, M);
      BigInt gin = pair_intersection_cardinality(e1, o1, e2, o2, M) +
                   pair_intersection_cardinality(e1, o2, e2, o1, M);
      BigInt sum = a11 + a12 + a21 + a22;
      return assemble(0, {gin, sum - 2 * gin, catalan(M) - sum + gin});
    }
    default:
      throw std::invalid_argument("positional_moment_balanced: at most two even positions");
  }
}

BigInt ginibre_moment(const PositionTuple& t) { return positional_moment(t).coefficient(0); }

}  // namespace elliptic
