#include <doctest.h>

#include <cmath>
#include <complex>

#include "elliptic/montecarlo.hpp"
#include "elliptic/moments.hpp"
#include "elliptic/rng.hpp"

using namespace elliptic;

namespace {

std::complex<double> naive_trace(const Word& w, const ComplexMatrix& x) {
  ComplexMatrix p = ComplexMatrix::Identity(x.rows(), x.cols());
  ComplexMatrix xd = x.adjoint();
  for (std::size_t i = 0; i < w.size(); ++i) p = p * (w[i] == Letter::plain ? x : xd);
  return p.trace() / static_cast<double>(x.rows());
}

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("stream seeds and normals are reproducible") {
  CHECK(derive_stream_seed(7, 0) == derive_stream_seed(7, 0));
  CHECK(derive_stream_seed(7, 0) != derive_stream_seed(7, 1));
  CHECK(derive_stream_seed(7, 0) != derive_stream_seed(8, 0));
  // reference SplitMix64 output for state 0
  SplitMix64 sm(0);
  CHECK(sm.next() == 0xE220A8397B1DCDAFULL);

  NormalStream a(42), b(42);
  double s = 0, s2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double x = a.next();
    CHECK_EQ(x, b.next());
    s += x;
    s2 += x * x;
  }
  CHECK(std::abs(s / n) < 5.0 / std::sqrt(n));
  CHECK(std::abs(s2 / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
  NormalStream u(1);
  for (int i = 0; i < 1000; ++i) {
    double x = u.uniform();
    CHECK(x > 0.0);
    CHECK(x <= 1.0);
  }
}

TEST_CASE("GOE entry variances") {
  const std::size_t N = 200;
  NormalStream rng(2024);
  GoeMatrix w = sample_goe(N, rng);
  CHECK((w.entries - w.entries.transpose()).norm() == 0.0);
  double off = 0, diag = 0;
  for (std::size_t i = 0; i < N; ++i) {
    diag += w.entries(i, i) * w.entries(i, i);
    for (std::size_t j = i + 1; j < N; ++j) off += w.entries(i, j) * w.entries(i, j);
  }
  double n_off = N * (N - 1) / 2.0;
  // N W_ij^2 is chi-square(1) off the diagonal, 2 chi-square(1) on it
  CHECK(std::abs(N * off / n_off - 1.0) < 5.0 * std::sqrt(2.0 / n_off));
  CHECK(std::abs(N * diag / N - 2.0) < 5.0 * 2.0 * std::sqrt(2.0 / N));
  CHECK_THROWS_AS(sample_goe(0, rng), std::invalid_argument);
}

TEST_CASE("elliptic entries") {
  const std::size_t N = 150;
  for (double rho : {-0.6, 0.0, 0.5}) {
    NormalStream rng(99);
    GeeMatrix x = sample_gee(N, rho, rng);
    std::complex<double> cross = 0;
    double sq = 0;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) {
        cross += x.entries(i, j) * x.entries(j, i);
        sq += std::norm(x.entries(i, j));
        ++cnt;
      }
    CAPTURE(rho);
    CHECK(std::abs(N * cross.real() / cnt - rho) < 5.0 / std::sqrt(cnt));
    CHECK(std::abs(N * cross.imag() / cnt) < 5.0 / std::sqrt(cnt));
    CHECK(std::abs(N * sq / cnt - 1.0) < 5.0 * std::sqrt(2.0 / cnt));
  }
  NormalStream r1(5), r2(5);
  GeeMatrix herm = sample_gee(40, 1.0, r1);
  CHECK(herm.entries.imag().norm() == 0.0);
  GeeMatrix anti = sample_gee(40, -1.0, r2);
  CHECK(anti.entries.real().norm() == 0.0);
  CHECK_THROWS_AS(sample_gee(10, 1.5, r1), std::invalid_argument);
}

TEST_CASE("normalized trace matches a naive product") {
  NormalStream rng(3);
  GeeMatrix x = sample_gee(30, 0.3, rng);
  for (const char* w : {"x", "xd", "xxdxdxdd", "dddxxxdx", "xxxxx", "dxxd"}) {
    Word word = Word::parse(w);
    auto a = normalized_trace(word, x.entries);
    auto b = naive_trace(word, x.entries);
    CAPTURE(w);
    CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
  }
  CHECK_THROWS_AS(normalized_trace(Word::parse("x"), ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("finite-N second moment") {
  // E tr(X X^dagger)/N = (N+1)/N exactly
  const std::size_t N = 50;
  auto r = estimate_word_moment(Word::parse("xd"), 0.4, N, 400, 11);
  double target = (N + 1.0) / N;
  CHECK(std::abs(r.mean - target) < 5 * r.std_error + 1e-12);
  CHECK(r.samples == 400);
  CHECK(r.seed == 11);
}

TEST_CASE("word moments against the closed form") {
  const std::size_t N = 200;
  for (double rho : {0.0, 1.0, 0.5}) {
    auto r = estimate_word_moment(Word::parse("xxxddd"), rho, N, 60, 1234);
    double exact = evaluate(block_moment(3, 3), rho);
    CAPTURE(rho);
    // finite-N bias is O(1/N) of the moment
    CHECK(std::abs(r.mean - exact) < 5 * r.std_error + 0.05 * exact);
    CHECK(std::abs(r.imag_mean) < 5 * r.imag_std_error + 1e-10);
  }
  CHECK(evaluate(block_moment(3, 3), 0.0) == 1.0);
  CHECK(evaluate(block_moment(3, 3), 1.0) == 5.0);
}

TEST_CASE("determinism") {
  Word w = Word::parse("xxdxd");
  auto a = estimate_word_moment(w, 0.3, 40, 20, 77, {512, 1});
  auto b = estimate_word_moment(w, 0.3, 40, 20, 77, {512, 4});
  auto c = estimate_word_moment(w, 0.3, 40, 20, 77, {512, 0});
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.imag_mean == b.imag_mean);
  CHECK(a.mean == c.mean);
  auto d = estimate_word_moment(w, 0.3, 40, 20, 78);
  CHECK(a.mean != d.mean);
}

TEST_CASE("batch matches single words") {
  std::vector<Word> words{Word::parse("xxxddd"), Word::parse("xd"), Word::parse("xxdxdd"), Word::block(6, 2)};
  auto batch = estimate_word_moments(words, 0.6, 30, 10, 5);
  REQUIRE(batch.size() == words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto single = estimate_word_moment(words[i], 0.6, 30, 10, 5);
    CHECK(batch[i].mean == doctest::Approx(single.mean).epsilon(1e-12));
    CHECK(batch[i].std_error == doctest::Approx(single.std_error).epsilon(1e-9));
  }
}

TEST_CASE("input errors") {
  Word w = Word::parse("xd");
  CHECK_THROWS_AS(estimate_word_moment(Word{}, 0.5, 10, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_word_moment(w, 1.2, 10, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_word_moment(w, 0.5, 0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_word_moment(w, 0.5, 10, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_word_moment(w, 0.5, 600, 10, 1), std::invalid_argument);
  CHECK_NOTHROW(estimate_word_moment(w, 0.5, 20, 2, 1, {20, 1}));
}

}  // TEST_SUITE
