#include "elliptic/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "elliptic/moments.hpp"

namespace elliptic {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

void check_q(double q) { require(std::isfinite(q) && q >= 1.0, "asymptotics: q must be >= 1"); }

void check_rho_open(double rho) {
  require(rho > 0.0 && rho < 1.0, "asymptotics: rho must lie in (0, 1); use the limit functions at the endpoints");
}

// x log x with the 0 log 0 = 0 convention.
double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

}  // namespace

double catalan_gf(double z) {
  require(z <= 0.25, "catalan_gf: z must be <= 1/4");
  return 2.0 / (1.0 + std::sqrt(1.0 - 4.0 * z));
}

double saddle_point(double q, double x) {
  check_q(q);
  require(x > 0.0 && std::isfinite(x), "saddle_point: x must be positive");
  double x2 = x * x;
  double a = (x2 - 1.0) / (x2 + 1.0);
  double s = q / ((q + 1.0) * (q + 1.0));
  return q / (q + 1.0) * a * catalan_gf(s * a * a);
}

double saddle_point_radical(double q, double x) {
  check_q(q);
  require(x > 0.0 && std::isfinite(x), "saddle_point_radical: x must be positive");
  double d = x * x - 1.0;
  if (d == 0.0) return 0.0;
  double A = (q + 1.0) * (x * x + 1.0);
  return 2.0 * q * d / (A + std::sqrt(A * A - 4.0 * q * d * d));
}

double rate_function(double q, double x, double y) {
  check_q(q);
  require(x > 0.0, "rate_function: x must be positive");
  require(std::abs(y) < 1.0, "rate_function: |y| must be < 1");
  double yq = y / q;
  return y * std::log(x * x) - xlogx(1.0 + y) - xlogx(1.0 - y) -
         q * (xlogx(1.0 + yq) + xlogx(1.0 - yq));
}

double rate_function_dy(double q, double x, double y) {
  check_q(q);
  require(x > 0.0, "rate_function_dy: x must be positive");
  require(std::abs(y) < 1.0, "rate_function_dy: |y| must be < 1");
  double yq = y / q;
  return std::log(x * x) - std::log1p(y) + std::log1p(-y) - std::log1p(yq) + std::log1p(-yq);
}

double rate_function_d2y(double q, double y) {
  check_q(q);
  require(std::abs(y) < 1.0, "rate_function_d2y: |y| must be < 1");
  return -2.0 / (1.0 - y * y) - 2.0 * q / (q * q - y * y);
}

double prefactor_g(double q, double y) {
  check_q(q);
  require(std::abs(y) < 1.0, "prefactor_g: |y| must be < 1");
  double yq = y / q;
  return 1.0 / ((1.0 + y) * (1.0 + yq) * std::sqrt((1.0 - y * y) * (1.0 - yq * yq)));
}

double h_prefactor(double q, double y) {
  return prefactor_g(q, y) / std::sqrt(-rate_function_d2y(q, y));
}

double h_prefactor_closed(double q, double y) {
  check_q(q);
  require(std::abs(y) < 1.0, "h_prefactor_closed: |y| must be < 1");
  return std::sqrt(q / (2.0 * (q + 1.0))) / ((1.0 + y) * (1.0 + y / q) * std::sqrt(1.0 - y * y / q));
}

double psi_prefactor(double q, double rho) {
  check_q(q);
  check_rho_open(rho);
  double y = saddle_point(q, rho);
  return 16.0 * std::pow(q, -1.25) * std::sqrt(rho) * y * y * h_prefactor(q, -y) /
         ((1.0 - rho) * (1.0 - rho) * (1.0 + rho));
}

double phi_rate(double q, double rho) {
  check_q(q);
  check_rho_open(rho);
  double yq = saddle_point(q, rho);
  double y1 = saddle_point(1.0, rho);
  return -rate_function(q, rho, yq) + 0.5 * (q + 1.0) * rate_function(1.0, rho, y1);
}

double phi_hat(double q, double rho) { return phi_rate(q, rho) / (q + 1.0); }

namespace {

void check_rescaled_args(std::size_t n, std::size_t m, double rho) {
  if (n % 2 != m % 2) throw std::invalid_argument("rescaled_exact: n and m must share parity");
  require(std::abs(rho) <= 1.0, "rescaled_exact: |rho| must be <= 1");
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log of the rank cardinality factor for a single block of size n with
// 2k (even n) or 2k+1 (odd n) mixed pairs.
double log_ballot(std::size_t n, std::size_t k) {
  double t = static_cast<double>(n / 2), kk = static_cast<double>(k);
  if (n % 2 == 0) return std::log(2.0 * kk + 1.0) - std::log(t + kk + 1.0) + log_binomial(2.0 * t, t + kk);
  return std::log(2.0 * (kk + 1.0)) - std::log(t + kk + 2.0) + log_binomial(2.0 * t + 1.0, t + kk + 1.0);
}

// log|P_n^m(rho)| and its sign, via lgamma. rho != 0.
double log_block_moment(std::size_t n, std::size_t m, double rho, int& sign) {
  std::size_t u = n / 2, v = m / 2;
  double log_rho = std::log(std::abs(rho));
  std::vector<double> logs;
  for (std::size_t k = 0; k <= std::min(u, v); ++k) {
    logs.push_back(static_cast<double>(u + v - 2 * k) * log_rho + log_ballot(n, k) + log_ballot(m, k));
  }
  // All exponents u+v-2k share one parity.
  sign = (rho < 0.0 && (u + v) % 2 == 1) ? -1 : 1;
  double peak = *std::max_element(logs.begin(), logs.end());
  double total = 0.0;
  for (double l : logs) total += std::exp(l - peak);
  return peak + std::log(total);
}

}  // namespace

double rescaled_exact_log_space(std::size_t n, std::size_t m, double rho) {
  check_rescaled_args(n, m, rho);
  if (rho == 0.0) return n == m ? 1.0 : 0.0;
  int s_nm = 1, s_nn = 1, s_mm = 1;
  double l_nm = log_block_moment(n, m, rho, s_nm);
  double l_nn = log_block_moment(n, n, rho, s_nn);
  double l_mm = log_block_moment(m, m, rho, s_mm);
  return s_nm * std::exp(l_nm - 0.5 * (l_nn + l_mm));
}

double rescaled_exact(std::size_t n, std::size_t m, double rho) {
  check_rescaled_args(n, m, rho);
  if (n + m > exact_size_limit) return rescaled_exact_log_space(n, m, rho);
  if (rho == 0.0) return n == m ? 1.0 : 0.0;
  int s_nm = 0, s_nn = 0, s_mm = 0;
  double l_nm = log_abs_evaluate(block_moment(n, m), rho, &s_nm);
  double l_nn = log_abs_evaluate(block_moment(n, n), rho, &s_nn);
  double l_mm = log_abs_evaluate(block_moment(m, m), rho, &s_mm);
  if (s_nm == 0) return 0.0;
  return s_nm * std::exp(l_nm - 0.5 * (l_nn + l_mm));
}

double rescaled_estimate(std::size_t u, std::size_t v, double rho) {
  if (v == 0 || u < v) throw std::domain_error("rescaled_estimate: requires u >= v >= 1");
  require(rho != 0.0 && std::abs(rho) < 1.0, "rescaled_estimate: requires 0 < |rho| < 1");
  double q = static_cast<double>(u) / static_cast<double>(v);
  double r = std::abs(rho);
  double est = psi_prefactor(q, r) * std::exp(-static_cast<double>(v) * phi_rate(q, r));
  if (rho < 0.0 && (u + v) % 2 == 1) est = -est;
  return est;
}

double rescaled_plateau(double q) {
  check_q(q);
  return std::pow(2.0 * std::sqrt(q) / (1.0 + q), 1.5);
}

double log_moment_near_one(std::size_t u, std::size_t v) {
  double s = static_cast<double>(u + v);
  require(s > 0.0, "log_moment_near_one: u + v must be positive");
  return s * std::log(4.0) - 0.5 * std::log(std::numbers::pi) - 1.5 * std::log(s);
}

double log_moment_estimate(std::size_t u, std::size_t v, double rho) {
  if (v == 0 || u < v) throw std::domain_error("log_moment_estimate: requires u >= v >= 1");
  check_rho_open(rho);
  double q = static_cast<double>(u) / static_cast<double>(v);
  double vv = static_cast<double>(v);
  double y = saddle_point(q, rho);
  return std::log(4.0 * std::sqrt(2.0 / std::numbers::pi)) +
         static_cast<double>(u + v) * std::log(4.0 * rho) - 1.5 * std::log(q) - 0.5 * std::log(vv) +
         std::log(y * y * h_prefactor(q, -y)) + vv * rate_function(q, rho, y);
}

RegimeDiagnostic classify_regime(double q, std::size_t v, double rho) {
  check_q(q);
  check_rho_open(rho);
  if (v == 0) throw std::domain_error("classify_regime: v must be >= 1");
  double y = saddle_point(q, rho);
  double width = 1.0 / std::sqrt(-static_cast<double>(v) * rate_function_d2y(q, y));
  double mag = std::abs(y);
  return {mag > regime_threshold * width ? Regime::interior_saddle : Regime::boundary_layer, mag, width};
}

void AsymptoticParams::validate() const {
  check_q(q);
  check_rho_open(rho);
  if (v == 0) throw std::domain_error("asymptotics: v must be >= 1");
}

AsymptoticSummary summarize(const AsymptoticParams& p) {
  p.validate();
  AsymptoticSummary s{};
  s.saddle = saddle_point(p.q, p.rho);
  s.rate = rate_function(p.q, p.rho, s.saddle);
  s.h = h_prefactor(p.q, -s.saddle);
  s.psi = psi_prefactor(p.q, p.rho);
  s.phi = phi_rate(p.q, p.rho);
  s.phi_hat = s.phi / (p.q + 1.0);
  s.estimate = s.psi * std::exp(-static_cast<double>(p.v) * s.phi);
  s.regime = classify_regime(p.q, p.v, p.rho).regime;
  return s;
}

}  // namespace elliptic
