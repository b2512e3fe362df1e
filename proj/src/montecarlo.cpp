#include "elliptic/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "parallel.hpp"

namespace elliptic {

GoeMatrix sample_goe(std::size_t N, NormalStream& rng) {
  if (N == 0) throw std::invalid_argument("sample_goe: N must be >= 1");
  const double off = std::sqrt(1.0 / static_cast<double>(N));
  const double diag = std::sqrt(2.0 / static_cast<double>(N));
  GoeMatrix w{N, RealMatrix(N, N)};
  const auto n = static_cast<Eigen::Index>(N);
  for (Eigen::Index i = 0; i < n; ++i) {
    w.entries(i, i) = diag * rng.next();
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double g = off * rng.next();
      w.entries(i, j) = g;
      w.entries(j, i) = g;
    }
  }
  return w;
}

GeeMatrix sample_gee(std::size_t N, double rho, NormalStream& rng) {
  if (!(std::abs(rho) <= 1.0)) throw std::invalid_argument("sample_gee: |rho| must be <= 1");
  GoeMatrix w1 = sample_goe(N, rng);
  GoeMatrix w2 = sample_goe(N, rng);
  const double a = std::sqrt((1.0 + rho) / 2.0);
  const double b = std::sqrt((1.0 - rho) / 2.0);
  GeeMatrix x{N, rho, ComplexMatrix(N, N)};
  x.entries.real() = a * w1.entries;
  x.entries.imag() = b * w2.entries;
  return x;
}

namespace {

struct Run {
  Letter letter;
  std::size_t length;
};

// Runs of the word read cyclically, starting at a letter change so that the
// first and last runs never carry the same letter.
std::vector<Run> cyclic_runs(const Word& word) {
  std::vector<Run> runs;
  std::size_t L = word.size();
  std::size_t start = 0;
  for (std::size_t i = 1; i < L; ++i) {
    if (word[i] != word[i - 1]) {
      start = i;
      break;
    }
  }
  for (std::size_t s = 0; s < L; ++s) {
    Letter l = word[(start + s) % L];
    if (runs.empty() || runs.back().letter != l) {
      runs.push_back({l, 1});
    } else {
      ++runs.back().length;
    }
  }
  return runs;
}

// X^1 .. X^k, each computed as X^{k-1} X so values never depend on which
// powers were requested before.
class PowerCache {
 public:
  explicit PowerCache(const ComplexMatrix& x) { powers_.push_back(x); }

  const ComplexMatrix& power(std::size_t k) {
    while (powers_.size() < k) powers_.push_back(powers_.back() * powers_.front());
    return powers_[k - 1];
  }

 private:
  std::vector<ComplexMatrix> powers_;
};

std::complex<double> trace_of(const std::vector<Run>& runs, PowerCache& cache, double n) {
  if (runs.empty()) return 1.0;
  if (runs.size() == 1) {
    const Run& r = runs[0];
    std::complex<double> t;
    if (r.length == 1) {
      t = cache.power(1).trace();
    } else {
      t = (cache.power(r.length - 1).transpose().cwiseProduct(cache.power(1))).sum();
    }
    return (r.letter == Letter::plain ? t : std::conj(t)) / n;
  }
  ComplexMatrix acc = runs[0].letter == Letter::plain ? cache.power(runs[0].length)
                                                      : ComplexMatrix(cache.power(runs[0].length).adjoint());
  for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
    const ComplexMatrix& p = cache.power(runs[i].length);
    if (runs[i].letter == Letter::plain) {
      acc = acc * p;
    } else {
      acc = acc * p.adjoint();
    }
  }
  // tr(A B) = sum_ij A_ij B_ji, with B = X^b or (X^b)^dagger.
  const Run& last = runs.back();
  const ComplexMatrix& p = cache.power(last.length);
  std::complex<double> t = last.letter == Letter::plain ? acc.cwiseProduct(p.transpose()).sum()
                                                        : acc.cwiseProduct(p.conjugate()).sum();
  return t / n;
}

void check_inputs(std::span<const Word> words, double rho, std::size_t N, std::size_t samples,
                  const MonteCarloConfig& config) {
  for (const auto& w : words) {
    if (w.empty()) throw std::invalid_argument("estimate_word_moment: word must be non-empty");
  }
  if (!(std::abs(rho) <= 1.0)) throw std::invalid_argument("estimate_word_moment: |rho| must be <= 1");
  if (N == 0) throw std::invalid_argument("estimate_word_moment: N must be >= 1");
  if (N > config.max_dim) {
    throw std::invalid_argument("estimate_word_moment: N = " + std::to_string(N) +
                                " exceeds the configured maximum " + std::to_string(config.max_dim));
  }
  if (samples < 2) throw std::invalid_argument("estimate_word_moment: need at least 2 samples");
}

void summarize_column(const std::vector<std::vector<std::complex<double>>>& values, std::size_t col,
                      EstimateResult& out) {
  const double n = static_cast<double>(values.size());
  double re = 0.0, im = 0.0;
  for (const auto& row : values) {
    re += row[col].real();
    im += row[col].imag();
  }
  re /= n;
  im /= n;
  double vre = 0.0, vim = 0.0;
  for (const auto& row : values) {
    vre += (row[col].real() - re) * (row[col].real() - re);
    vim += (row[col].imag() - im) * (row[col].imag() - im);
  }
  out.mean = re;
  out.imag_mean = im;
  out.std_error = std::sqrt(vre / (n - 1.0) / n);
  out.imag_std_error = std::sqrt(vim / (n - 1.0) / n);
}

}  // namespace

std::complex<double> normalized_trace(const Word& word, const ComplexMatrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("normalized_trace: matrix must be square");
  PowerCache cache(x);
  return trace_of(cyclic_runs(word), cache, static_cast<double>(x.rows()));
}

std::vector<EstimateResult> estimate_word_moments(std::span<const Word> words, double rho,
                                                  std::size_t N, std::size_t samples,
                                                  std::uint64_t seed,
                                                  const MonteCarloConfig& config) {
  check_inputs(words, rho, N, samples, config);
  std::vector<std::vector<Run>> runs;
  runs.reserve(words.size());
  for (const auto& w : words) runs.push_back(cyclic_runs(w));

  std::vector<std::vector<std::complex<double>>> values(samples);
  detail::parallel_for(samples, config.threads, [&](std::size_t s) {
    NormalStream rng(derive_stream_seed(seed, s));
    GeeMatrix x = sample_gee(N, rho, rng);
    PowerCache cache(x.entries);
    auto& row = values[s];
    row.reserve(runs.size());
    for (const auto& r : runs) row.push_back(trace_of(r, cache, static_cast<double>(N)));
  });

  std::vector<EstimateResult> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    summarize_column(values, i, out[i]);
    out[i].samples = samples;
    out[i].seed = seed;
  }
  return out;
}

EstimateResult estimate_word_moment(const Word& word, double rho, std::size_t N,
                                    std::size_t samples, std::uint64_t seed,
                                    const MonteCarloConfig& config) {
  return estimate_word_moments(std::span<const Word>(&word, 1), rho, N, samples, seed, config)[0];
}

}  // namespace elliptic
