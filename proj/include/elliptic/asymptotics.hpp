#pragma once

#include <cstddef>

namespace elliptic {

/// Catalan generating function g(z) = (1 - sqrt(1 - 4z)) / (2z), g(0) = 1.
/// Throws std::domain_error for z > 1/4.
double catalan_gf(double z);

/// Saddle point y*_q(x) of F_q(x, .), from the generating-function form
/// (q/(q+1)) a g(q a^2/(q+1)^2) with a = (x^2-1)/(x^2+1). Regular at x = 1.
/// Defined for every x > 0 with y*_q(1/x) = -y*_q(x); q >= 1.
double saddle_point(double q, double x);

/// Same root from the quadratic, written as 2q(x^2-1) / (A + sqrt(A^2 - 4q(x^2-1)^2))
/// with A = (q+1)(x^2+1), which avoids cancellation near x = 1.
double saddle_point_radical(double q, double x);

/// F_q(x, y) = y log x^2 - (1+y)log(1+y) - (1-y)log(1-y)
///             - q[(1+y/q)log(1+y/q) + (1-y/q)log(1-y/q)].
/// Requires x > 0, |y| < 1 (hence |y| < q).
double rate_function(double q, double x, double y);

/// d/dy F_q(x, y).
double rate_function_dy(double q, double x, double y);

/// d^2/dy^2 F_q(x, y) = -2/(1-y^2) - 2q/(q^2-y^2); independent of x.
double rate_function_d2y(double q, double y);

/// g_q(y) = 1 / ((1+y)(1+y/q) sqrt((1-y^2)(1-y^2/q^2))).
double prefactor_g(double q, double y);

/// H_q(y) = (-d^2F/dy^2)^{-1/2} g_q(y).
double h_prefactor(double q, double y);

/// sqrt(q/(2(q+1))) / ((1+y)(1+y/q) sqrt(1-y^2/q)); equal to h_prefactor.
double h_prefactor_closed(double q, double y);

/// Psi_q(rho) = 16 q^{-5/4} sqrt(rho) y*^2 H_q(-y*) / ((1-rho)^2 (1+rho)),
/// y* = y*_q(rho). For 0 < rho < 1.
double psi_prefactor(double q, double rho);

/// Phi_q(rho) = -F_q(rho, y*_q(rho)) + (q+1)/2 F_1(rho, y*_1(rho)).
double phi_rate(double q, double rho);

/// Phi_q(rho) / (q+1).
double phi_hat(double q, double rho);

/// P_n^m / sqrt(P_n^n P_m^m) from the exact polynomials. n and m must share
/// parity, |rho| <= 1. Switches to rescaled_exact_log_space above
/// exact_size_limit total letters.
double rescaled_exact(std::size_t n, std::size_t m, double rho);

inline constexpr std::size_t exact_size_limit = 2000;

/// Same ratio with closed-form coefficients evaluated through lgamma.
double rescaled_exact_log_space(std::size_t n, std::size_t m, double rho);

/// Psi_q(rho) exp(-(u+v) Phi_hat_q(rho)) with q = u/v. Requires u >= v >= 1
/// and 0 < |rho| < 1; negative rho picks up the sign (-1)^{u+v}.
double rescaled_estimate(std::size_t u, std::size_t v, double rho);

/// Limit of the rescaled moment at rho = 1 along the ray q:
/// (2 sqrt(q) / (1 + q))^{3/2}.
double rescaled_plateau(double q);

/// log of 4^{u+v} / (sqrt(pi) (u+v)^{3/2}), the large-order behaviour of the
/// rho = 1 moment C_{u+v}.
double log_moment_near_one(std::size_t u, std::size_t v);

/// log of the saddle-point estimate of P_{2u}^{2v}(rho) itself (not rescaled):
///   4 sqrt(2/pi) (4 rho)^{u+v} q^{-3/2} v^{-1/2} y*^2 H_q(-y*) e^{v F_q(rho, y*)}
/// with y* = y*_q(rho), 0 < rho < 1.
double log_moment_estimate(std::size_t u, std::size_t v, double rho);

enum class Regime {
  interior_saddle,  // saddle well inside the summation range: Gaussian sum
  boundary_layer    // saddle within a few widths of y = 0: half-Gaussian
};

struct RegimeDiagnostic {
  Regime regime;
  double saddle;  // |y*_q(rho)|
  double width;   // (-v d^2F/dy^2)^{-1/2} at the saddle
};

inline constexpr double regime_threshold = 3.0;

/// Interior when |y*| exceeds regime_threshold Gaussian widths.
RegimeDiagnostic classify_regime(double q, std::size_t v, double rho);

struct AsymptoticParams {
  double q = 1.0;
  double rho = 0.5;
  std::size_t v = 1;

  /// Throws std::domain_error unless q >= 1, 0 < rho < 1, v >= 1.
  void validate() const;
};

struct AsymptoticSummary {
  double saddle;    // y*_q(rho)
  double rate;      // F_q(rho, y*)
  double h;         // H_q(-y*)
  double psi;
  double phi;
  double phi_hat;
  double estimate;  // psi * exp(-v phi)
  Regime regime;
};

AsymptoticSummary summarize(const AsymptoticParams& params);

}  // namespace elliptic
