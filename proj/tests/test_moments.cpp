#include <doctest.h>

#include <cmath>
#include <random>

#include "elliptic/errors.hpp"
#include "elliptic/moments.hpp"
#include "oracles.hpp"

using namespace elliptic;

namespace {

MomentPolynomial poly(std::initializer_list<std::pair<const std::size_t, BigInt>> terms) {
  return MomentPolynomial(MomentPolynomial::Terms(terms));
}

std::string random_word(std::mt19937_64& gen, std::size_t L) {
  std::string s;
  for (std::size_t i = 0; i < L; ++i) s.push_back(gen() % 2 ? 'x' : 'd');
  return s;
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("polynomial basics") {
  MomentPolynomial p;
  CHECK(p.is_zero());
  CHECK(p.to_string() == "0");
  p.add_term(2, 9);
  p.add_term(4, 5);
  p.add_term(6, 0);
  CHECK(p.terms().size() == 2);
  CHECK(p.to_string() == "5*rho^4 + 9*rho^2");
  CHECK(p.coefficient(4) == 5);
  CHECK(p.coefficient(3) == 0);
  CHECK(p.coefficient_sum() == 14);
  p.add_term(2, -9);
  CHECK(p == MomentPolynomial::monomial(4, 5));
  CHECK(p.shifted(1) == MomentPolynomial::monomial(5, 5));
  MomentPolynomial q = poly({{0, 1}, {1, -2}});
  CHECK(q.to_string() == "-2*rho + 1");
  q += poly({{1, 2}});
  CHECK(q == MomentPolynomial::monomial(0, 1));
}

TEST_CASE("evaluation") {
  MomentPolynomial p = poly({{4, 5}, {2, 9}});
  CHECK(evaluate(p, 1.0) == 14.0);
  CHECK(evaluate(p, 0.5) == doctest::Approx(5.0 / 16 + 9.0 / 4));
  CHECK(evaluate_exact(p, Rational(1, 2)) == Rational(41, 16));
  MomentPolynomial odd = poly({{3, 10}, {1, 4}});
  CHECK(evaluate(odd, -1.0) == -14.0);
  CHECK(evaluate_exact(odd, -1) == -14);
  auto c = evaluate_checked(odd, 1.5);
  CHECK(c.outside_unit_interval);
  CHECK(c.value == doctest::Approx(10 * 3.375 + 6));
  CHECK_FALSE(evaluate_checked(odd, -1.0).outside_unit_interval);
  CHECK(evaluate(MomentPolynomial{}, 0.3) == 0.0);
}

TEST_CASE("log-space evaluation handles huge coefficients") {
  MomentPolynomial p = block_moment(1200, 800);
  int sign = 0;
  double l = log_abs_evaluate(p, 1.0, &sign);
  CHECK(sign == 1);
  CHECK(l == doctest::Approx(log_abs(catalan(1000))).epsilon(1e-12));
  MomentPolynomial small = poly({{4, 5}, {2, 9}});
  CHECK(std::exp(log_abs_evaluate(small, -0.5, &sign)) == doctest::Approx(evaluate(small, -0.5)));
  CHECK(sign == 1);
  MomentPolynomial odd = poly({{3, 10}, {1, 4}});
  CHECK(std::exp(log_abs_evaluate(odd, -0.5, &sign)) == doctest::Approx(-evaluate(odd, -0.5)));
  CHECK(sign == -1);
  CHECK(std::isinf(log_abs_evaluate(odd, 0.0, &sign)));
  CHECK(sign == 0);
}

TEST_CASE("word oracle examples") {
  CHECK(word_moment_oracle(Word::parse("xxdxdxdd")) == poly({{0, 5}, {2, 9}}));
  CHECK(word_moment_oracle(Word::parse("xd")) == poly({{0, 1}}));
  CHECK(word_moment_oracle(Word::parse("xx")) == poly({{1, 1}}));
  CHECK(word_moment_oracle(Word::parse("xdx")).is_zero());
  CHECK(word_moment_oracle(Word{}) == poly({{0, 1}}));
  CHECK_THROWS_AS(word_moment_oracle(Word::block(20, 6)), CapacityError);
}

TEST_CASE("block moment examples") {
  CHECK(block_moment(6, 2) == poly({{4, 5}, {2, 9}}));
  CHECK(block_moment(5, 3) == poly({{3, 10}, {1, 4}}));
  CHECK(block_moment(4, 8) == poly({{6, 28}, {4, 84}, {2, 20}}));
  CHECK(block_moment(4, 8).coefficient_sum() == 132);
  CHECK(block_moment(3, 2).is_zero());
  CHECK(block_moment(3, 3) == poly({{0, 1}, {2, 4}}));
  CHECK(block_moment(0, 0) == poly({{0, 1}}));
}

TEST_CASE("block moments agree with the oracle and with an independent census") {
  for (std::size_t n = 0; n <= 16; ++n) {
    for (std::size_t m = 0; n + m <= 16; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      MomentPolynomial closed = block_moment(n, m);
      CHECK(closed == word_moment_oracle(Word::block(n, m)));
      CHECK(closed == block_moment(m, n));
      if ((n + m) % 2 == 0) {
        CHECK(closed.coefficient_sum() == catalan((n + m) / 2));
        for (const auto& [e, c] : closed.terms()) CHECK(e % 2 == ((n + m) / 2 - n % 2) % 2);
      }
      if (n + m <= 12) {
        MomentPolynomial ref(oracle::moment(oracle::block_word(n, m)));
        CHECK(closed == ref);
      }
    }
  }
}

TEST_CASE("oracle matches an independent enumeration on random words") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 80; ++trial) {
    std::string s = random_word(gen, 2 * (gen() % 7));
    CAPTURE(s);
    CHECK(word_moment_oracle(Word::parse(s)) == MomentPolynomial(oracle::moment(s)));
  }
}

TEST_CASE("moment invariances") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t L = 2 * (1 + gen() % 6);
    Word w = Word::parse(random_word(gen, L));
    CAPTURE(w.to_string());
    MomentPolynomial p = word_moment_oracle(w);
    for (std::size_t t = 0; t < L; ++t) CHECK(word_moment_oracle(w.rotated(t)) == p);
    CHECK(word_moment_oracle(w.conjugated()) == p);
    CHECK(word_moment_oracle(w.letters_swapped()) == p);
    CHECK(p.coefficient_sum() == catalan(L / 2));
  }
}

TEST_CASE("balanced alternating words give Catalan constants") {
  for (std::size_t M = 1; M <= 8; ++M) {
    std::string s;
    for (std::size_t i = 0; i < M; ++i) s += "xd";
    CHECK(word_moment_oracle(Word::parse(s)) == MomentPolynomial::monomial(0, catalan(M)));
  }
}

TEST_CASE("special values") {
  CHECK(special_value(6, 2, Ensemble::goe) == 14);
  CHECK(special_value(4, 4, Ensemble::ginibre) == 1);
  CHECK(special_value(6, 2, Ensemble::ginibre) == 0);
  CHECK(special_value(5, 3, Ensemble::anti_goe) == -14);
  CHECK(special_value(3, 2, Ensemble::goe) == 0);
  for (std::size_t n = 0; n <= 14; ++n) {
    for (std::size_t m = 0; m <= 14; ++m) {
      MomentPolynomial p = block_moment(n, m);
      CHECK(evaluate_exact(p, 1) == Rational(special_value(n, m, Ensemble::goe)));
      CHECK(evaluate_exact(p, -1) == Rational(special_value(n, m, Ensemble::anti_goe)));
      CHECK(evaluate_exact(p, 0) == Rational(special_value(n, m, Ensemble::ginibre)));
    }
  }
}

}  // TEST_SUITE
