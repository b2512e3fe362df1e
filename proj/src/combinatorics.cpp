#include "elliptic/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "elliptic/errors.hpp"
#include "parallel.hpp"

namespace elliptic {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;  // exact: acc is binom(n-k+i, i) here
  }
  return acc;
}

BigInt catalan(std::size_t n) { return binomial(2 * n, n) / (n + 1); }

BigInt catalan_triangle(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("catalan_triangle: n and k must be >= 1");
  if (k > n) return 0;
  return binomial(n + k - 2, n - 1) * (n - k + 1) / n;
}

std::vector<std::vector<BigInt>> catalan_triangle_table(std::size_t n_max) {
  std::vector<std::vector<BigInt>> c(n_max + 1, std::vector<BigInt>(n_max + 1, 0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    c[n][1] = 1;
    for (std::size_t k = 2; k <= n; ++k) c[n][k] = c[n][k - 1] + c[n - 1][k];
  }
  return c;
}

BigInt ballot_b(std::size_t k, std::size_t t) {
  if (k > t) return 0;
  return binomial(2 * t, t + k) * (2 * k + 1) / (t + k + 1);
}

BigInt ballot_b_recursive(std::size_t k, std::size_t t) {
  if (k > t) return 0;
  std::vector<BigInt> cat(t + 1);
  for (std::size_t i = 0; i <= t; ++i) cat[i] = catalan(i);

  // row[s] holds B(j, s) for the current j, s = 0..t.
  std::vector<BigInt> row(cat);
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<BigInt> next(t + 1, 0);
    for (std::size_t tt = j; tt <= t; ++tt) {
      BigInt outer = 0;
      for (std::size_t r = j; r <= tt; ++r) {
        BigInt inner = 0;
        for (std::size_t s = j; s <= r; ++s) inner += cat[r - s] * row[s - 1];
        outer += cat[tt - r] * inner;
      }
      next[tt] = outer;
    }
    row = std::move(next);
  }
  return row[t];
}

BigInt ballot_b_odd(std::size_t k, std::size_t t) {
  if (k > t) return 0;
  return binomial(2 * t + 1, t + k + 1) * (2 * (k + 1)) / (t + k + 2);
}

BigInt rank_cardinality_closed(std::size_t u, std::size_t v, std::size_t k, Parity parity) {
  if (k > std::min(u, v)) {
    throw std::invalid_argument("rank_cardinality_closed: k must not exceed min(u, v)");
  }
  if (parity == Parity::even) return ballot_b(k, u) * ballot_b(k, v);
  return ballot_b_odd(k, u) * ballot_b_odd(k, v);
}

// ---------------------------------------------------------------------------

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char c : text) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'x': out.push_back(Letter::plain); break;
      case 'd': out.push_back(Letter::dagger); break;
      default:
        throw std::invalid_argument(std::string("word: unexpected character '") + c +
                                    "' (use x for X and d for X^dagger)");
    }
  }
  return Word(std::move(out));
}

Word Word::block(std::size_t plain, std::size_t dagger) {
  std::vector<Letter> out(plain, Letter::plain);
  out.insert(out.end(), dagger, Letter::dagger);
  return Word(std::move(out));
}

Word Word::from_blocks(std::span<const std::size_t> plain, std::span<const std::size_t> dagger) {
  if (plain.size() != dagger.size()) {
    throw std::invalid_argument("word: block exponent lists differ in length");
  }
  std::vector<Letter> out;
  for (std::size_t i = 0; i < plain.size(); ++i) {
    out.insert(out.end(), plain[i], Letter::plain);
    out.insert(out.end(), dagger[i], Letter::dagger);
  }
  return Word(std::move(out));
}

std::size_t Word::count(Letter letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

Word Word::rotated(std::size_t t) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(t % out.size()), out.end());
  return Word(std::move(out));
}

static Letter flip(Letter l) { return l == Letter::plain ? Letter::dagger : Letter::plain; }

Word Word::letters_swapped() const {
  std::vector<Letter> out(letters_);
  for (auto& l : out) l = flip(l);
  return Word(std::move(out));
}

Word Word::conjugated() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = flip(l);
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto l : letters_) s.push_back(l == Letter::plain ? 'x' : 'd');
  return s;
}

// ---------------------------------------------------------------------------

Pairing::Pairing(std::size_t ground_size, std::vector<Pair> pairs)
    : ground_size_(ground_size), pairs_(std::move(pairs)), mate_(ground_size + 1, 0) {
  if (ground_size % 2 != 0) throw std::invalid_argument("pairing: ground set size must be even");
  if (pairs_.size() * 2 != ground_size) {
    throw std::invalid_argument("pairing: expected " + std::to_string(ground_size / 2) +
                                " pairs, got " + std::to_string(pairs_.size()));
  }
  for (auto& p : pairs_) {
    if (p.lo > p.hi) std::swap(p.lo, p.hi);
    if (p.lo == 0 || p.hi > ground_size || p.lo == p.hi) {
      throw std::invalid_argument("pairing: pair (" + std::to_string(p.lo) + "," +
                                  std::to_string(p.hi) + ") outside 1.." +
                                  std::to_string(ground_size));
    }
    if (mate_[p.lo] != 0 || mate_[p.hi] != 0) {
      throw std::invalid_argument("pairing: index used twice");
    }
    mate_[p.lo] = p.hi;
    mate_[p.hi] = p.lo;
  }
  std::sort(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) { return a.lo < b.lo; });
}

Pairing Pairing::from_partners(std::span<const std::size_t> partner) {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < partner.size(); ++i) {
    if (partner[i] >= partner.size() || partner[partner[i]] != i || partner[i] == i) {
      throw std::invalid_argument("pairing: partner table is not an involution without fixed points");
    }
    if (i < partner[i]) pairs.push_back({i + 1, partner[i] + 1});
  }
  return Pairing(partner.size(), std::move(pairs));
}

std::size_t Pairing::partner(std::size_t index) const {
  if (index == 0 || index > ground_size_) throw std::out_of_range("pairing: index out of range");
  return mate_[index];
}

bool Pairing::is_non_crossing() const {
  // Scan left to right; a closing index must match the innermost open one.
  std::vector<std::size_t> open;
  for (std::size_t i = 1; i <= ground_size_; ++i) {
    if (mate_[i] > i) {
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != mate_[i]) return false;
      open.pop_back();
    }
  }
  return true;
}

static void check_sizes(const Word& word, const Pairing& pairing) {
  if (word.size() != pairing.ground_size()) {
    throw std::invalid_argument("sigma: word length " + std::to_string(word.size()) +
                                " does not match pairing ground set " +
                                std::to_string(pairing.ground_size()));
  }
}

std::size_t sigma_same(const Word& word, const Pairing& pairing) {
  check_sizes(word, pairing);
  std::size_t n = 0;
  for (const auto& p : pairing.pairs()) n += word[p.lo - 1] == word[p.hi - 1];
  return n;
}

std::size_t sigma_mixed(const Word& word, const Pairing& pairing) {
  check_sizes(word, pairing);
  return pairing.pairs().size() - sigma_same(word, pairing);
}

// ---------------------------------------------------------------------------

std::size_t enumeration_ceiling() {
  const char* env = std::getenv("ELLIPTIC_MOMENTS_MAX_L");
  if (env == nullptr || *env == '\0') return default_enumeration_ceiling;
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0' || value == 0) {
    throw std::invalid_argument(std::string("ELLIPTIC_MOMENTS_MAX_L must be a positive integer, got '") +
                                env + "'");
  }
  return static_cast<std::size_t>(value);
}

void require_enumerable(std::size_t length) {
  std::size_t ceiling = enumeration_ceiling();
  if (length > ceiling) throw CapacityError(length, ceiling);
}

namespace {

struct Interval {
  std::size_t lo, hi;  // half-open, 0-based
};

class Splitter {
 public:
  Splitter(std::size_t length, const PairingVisitor& visit)
      : partner_(length, 0), visit_(visit) {
    pending_.reserve(length + 2);
  }

  void run_from(std::size_t first_partner) {
    std::size_t n = partner_.size();
    pair_up(0, first_partner);
    pending_.push_back({first_partner + 1, n});
    pending_.push_back({1, first_partner});
    descend();
  }

 private:
  void pair_up(std::size_t a, std::size_t b) {
    partner_[a] = b;
    partner_[b] = a;
  }

  void descend() {
    while (!pending_.empty() && pending_.back().lo == pending_.back().hi) pending_.pop_back();
    if (pending_.empty()) {
      visit_(partner_);
      return;
    }
    auto saved = pending_;
    Interval iv = pending_.back();
    pending_.pop_back();
    std::size_t base = pending_.size();
    for (std::size_t p = iv.lo + 1; p < iv.hi; p += 2) {
      pair_up(iv.lo, p);
      pending_.resize(base);
      pending_.push_back({p + 1, iv.hi});
      pending_.push_back({iv.lo + 1, p});
      descend();
    }
    pending_ = std::move(saved);
  }

  std::vector<std::size_t> partner_;
  std::vector<Interval> pending_;
  const PairingVisitor& visit_;
};

}  // namespace

std::size_t nc_branch_count(std::size_t length) { return length % 2 == 0 ? length / 2 : 0; }

void for_each_nc_pairing_in_branch(std::size_t length, std::size_t branch,
                                   const PairingVisitor& visit) {
  if (branch >= nc_branch_count(length)) return;
  Splitter(length, visit).run_from(2 * branch + 1);
}

void for_each_nc_pairing(std::size_t length, const PairingVisitor& visit) {
  if (length == 0) {
    visit(std::span<const std::size_t>{});
    return;
  }
  for (std::size_t b = 0; b < nc_branch_count(length); ++b) {
    for_each_nc_pairing_in_branch(length, b, visit);
  }
}

std::vector<Pairing> enumerate_nc_pairings(std::size_t length) {
  std::vector<Pairing> out;
  for_each_nc_pairing(length, [&](std::span<const std::size_t> partner) {
    out.push_back(Pairing::from_partners(partner));
  });
  return out;
}

std::map<std::size_t, BigInt> rank_census(const Word& word) {
  std::map<std::size_t, BigInt> census;
  std::size_t length = word.size();
  if (length % 2 != 0) return census;
  require_enumerable(length);

  std::size_t plain = word.count(Letter::plain);
  std::size_t cap = std::min(plain, length - plain);
  for (std::size_t l = plain % 2; l <= cap; l += 2) census[l] = 0;
  if (length == 0) {
    census[0] = 1;
    return census;
  }

  // Per-branch counts indexed by the number of mixed pairs.
  std::size_t branches = nc_branch_count(length);
  std::vector<std::vector<std::uint64_t>> partial(branches,
                                                  std::vector<std::uint64_t>(length / 2 + 1, 0));
  auto letters = word.letters();
  detail::parallel_for(branches, 0, [&](std::size_t b) {
    auto& counts = partial[b];
    for_each_nc_pairing_in_branch(length, b, [&](std::span<const std::size_t> partner) {
      std::size_t mixed = 0;
      for (std::size_t i = 0; i < length; ++i) {
        if (i < partner[i]) mixed += letters[i] != letters[partner[i]];
      }
      ++counts[mixed];
    });
  });
  for (const auto& counts : partial) {
    for (std::size_t l = 0; l < counts.size(); ++l) {
      if (counts[l] != 0) census[l] += counts[l];
    }
  }
  return census;
}

}  // namespace elliptic
