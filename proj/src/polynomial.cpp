#include "elliptic/polynomial.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace elliptic {

MomentPolynomial::MomentPolynomial(Terms terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

MomentPolynomial MomentPolynomial::monomial(std::size_t exponent, BigInt coefficient) {
  MomentPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

void MomentPolynomial::add_term(std::size_t exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MomentPolynomial& MomentPolynomial::operator+=(const MomentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BigInt MomentPolynomial::coefficient(std::size_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MomentPolynomial::coefficient_sum() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

MomentPolynomial MomentPolynomial::shifted(std::size_t shift) const {
  MomentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

std::string MomentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    BigInt mag = negative ? BigInt(-c) : c;
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "*";
    s += "rho";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

double evaluate(const MomentPolynomial& poly, double rho) {
  const auto& terms = poly.terms();
  if (terms.empty()) return 0.0;
  // Horner over the dense exponent range, highest power first.
  double acc = 0.0;
  std::size_t degree = terms.rbegin()->first;
  auto it = terms.rbegin();
  for (std::size_t e = degree + 1; e-- > 0;) {
    acc *= rho;
    if (it != terms.rend() && it->first == e) {
      acc += it->second.convert_to<double>();
      ++it;
    }
  }
  return acc;
}

Rational evaluate_exact(const MomentPolynomial& poly, const Rational& rho) {
  const auto& terms = poly.terms();
  if (terms.empty()) return 0;
  Rational acc = 0;
  std::size_t degree = terms.rbegin()->first;
  auto it = terms.rbegin();
  for (std::size_t e = degree + 1; e-- > 0;) {
    acc *= rho;
    if (it != terms.rend() && it->first == e) {
      acc += Rational(it->second);
      ++it;
    }
  }
  return acc;
}

CheckedValue evaluate_checked(const MomentPolynomial& poly, double rho) {
  return {evaluate(poly, rho), std::abs(rho) > 1.0};
}

double log_abs_evaluate(const MomentPolynomial& poly, double rho, int* sign) {
  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  std::vector<int> signs;
  double log_rho = std::log(std::abs(rho));
  for (const auto& [e, c] : poly.terms()) {
    if (rho == 0.0 && e != 0) continue;
    int s = c < 0 ? -1 : 1;
    if (rho < 0.0 && e % 2 == 1) s = -s;
    logs.push_back(log_abs(c) + (e == 0 ? 0.0 : static_cast<double>(e) * log_rho));
    signs.push_back(s);
  }
  if (logs.empty()) {
    if (sign) *sign = 0;
    return neg_inf;
  }
  double peak = logs[0];
  for (double l : logs) peak = std::max(peak, l);
  double total = 0.0;
  for (std::size_t i = 0; i < logs.size(); ++i) total += signs[i] * std::exp(logs[i] - peak);
  if (sign) *sign = total > 0 ? 1 : (total < 0 ? -1 : 0);
  if (total == 0.0) return neg_inf;
  return peak + std::log(std::abs(total));
}

}  // namespace elliptic
