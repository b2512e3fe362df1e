#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "elliptic/bigint.hpp"

namespace elliptic {

/// Polynomial in rho with exact integer coefficients. Sparse: only non-zero
/// coefficients are stored, so the zero polynomial is the empty map.
class MomentPolynomial {
 public:
  using Terms = std::map<std::size_t, BigInt>;

  MomentPolynomial() = default;
  explicit MomentPolynomial(Terms terms);
  static MomentPolynomial monomial(std::size_t exponent, BigInt coefficient);

  void add_term(std::size_t exponent, const BigInt& coefficient);
  MomentPolynomial& operator+=(const MomentPolynomial& other);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(std::size_t exponent) const;
  /// Value at rho = 1.
  BigInt coefficient_sum() const;
  /// Multiplication by rho^shift.
  MomentPolynomial shifted(std::size_t shift) const;

  /// Descending powers, e.g. "5*rho^4 + 9*rho^2"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const MomentPolynomial&, const MomentPolynomial&) = default;

 private:
  Terms terms_;
};

/// Horner evaluation in double precision.
double evaluate(const MomentPolynomial& poly, double rho);

Rational evaluate_exact(const MomentPolynomial& poly, const Rational& rho);

struct CheckedValue {
  double value;
  bool outside_unit_interval;  // |rho| > 1: the polynomial is not a moment there
};

CheckedValue evaluate_checked(const MomentPolynomial& poly, double rho);

/// log|poly(rho)| computed term-wise in log space with a signed
/// log-sum-exp, so that coefficients far beyond double range are handled.
/// Returns -inf for a zero value. `sign` receives -1, 0 or +1 when given.
double log_abs_evaluate(const MomentPolynomial& poly, double rho, int* sign = nullptr);

}  // namespace elliptic
