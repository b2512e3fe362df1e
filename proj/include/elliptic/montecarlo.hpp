#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "elliptic/combinatorics.hpp"
#include "elliptic/rng.hpp"

namespace elliptic {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Real symmetric W with E[W_ij^2] = 1/N off the diagonal and 2/N on it.
struct GoeMatrix {
  std::size_t N;
  RealMatrix entries;
};

/// X = sqrt((1+rho)/2) W1 + i sqrt((1-rho)/2) W2 for independent GOE W1, W2.
struct GeeMatrix {
  std::size_t N;
  double rho;
  ComplexMatrix entries;
};

/// Draws the upper triangle row by row (diagonal first in each row).
GoeMatrix sample_goe(std::size_t N, NormalStream& rng);

/// W1 is drawn before W2 from the same stream.
GeeMatrix sample_gee(std::size_t N, double rho, NormalStream& rng);

/// tr(X^{e_1} ... X^{e_L}) / N for a sampled matrix.
std::complex<double> normalized_trace(const Word& word, const ComplexMatrix& x);

struct EstimateResult {
  double mean = 0.0;       // average of Re tr(P)/N
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  double imag_mean = 0.0;  // average of Im tr(P)/N; zero in expectation
  double imag_std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

struct MonteCarloConfig {
  std::size_t max_dim = 512;
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// Sample s uses a NormalStream seeded with derive_stream_seed(seed, s), and
/// results are reduced in sample order, so the outcome depends only on the
/// arguments (not on the thread count).
EstimateResult estimate_word_moment(const Word& word, double rho, std::size_t N,
                                    std::size_t samples, std::uint64_t seed,
                                    const MonteCarloConfig& config = {});

/// Several words evaluated on the same matrix samples. Powers of X are shared
/// between words; result i matches estimate_word_moment(words[i], ...).
std::vector<EstimateResult> estimate_word_moments(std::span<const Word> words, double rho,
                                                  std::size_t N, std::size_t samples,
                                                  std::uint64_t seed,
                                                  const MonteCarloConfig& config = {});

}  // namespace elliptic
