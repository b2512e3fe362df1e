#include <doctest.h>

#include <cmath>
#include <vector>

#include "elliptic/asymptotics.hpp"
#include "elliptic/moments.hpp"

using namespace elliptic;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("catalan generating function") {
  CHECK(catalan_gf(0.0) == 1.0);
  CHECK(catalan_gf(0.25) == 2.0);
  CHECK(catalan_gf(3.0 / 16) == doctest::Approx(4.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(catalan_gf(0.2500001), std::domain_error);
  for (double z : grid(-2.0, 0.25, 50)) {
    double g = catalan_gf(z);
    CHECK(std::abs(z * g * g - g + 1.0) < 1e-13);
  }
  // power series sum_n C_n z^n
  double z = 0.1, s = 0.0;
  for (std::size_t n = 0; n < 60; ++n) s += catalan(n).convert_to<double>() * std::pow(z, static_cast<double>(n));
  CHECK(catalan_gf(z) == doctest::Approx(s).epsilon(1e-13));
}

TEST_CASE("saddle point") {
  CHECK(saddle_point(1.0, 1.0) == 0.0);
  CHECK(saddle_point(3.0, 1.0) == 0.0);
  CHECK(saddle_point(1.0, 2.0) == doctest::Approx(0.3 * catalan_gf(0.09)).epsilon(1e-15));
  CHECK(saddle_point_radical(1.0, 2.0) == doctest::Approx(0.3 * catalan_gf(0.09)).epsilon(1e-14));
  for (double q : {1.0, 2.0, 5.0}) {
    double h = 1e-6;
    CHECK(saddle_point(q, 1.0 + h) / h == doctest::Approx(q / (q + 1)).epsilon(1e-5));
  }
  for (double q : grid(1.0, 8.0, 15)) {
    for (double x : grid(1.0001, 10.0, 60)) {
      CAPTURE(q);
      CAPTURE(x);
      double a = saddle_point(q, x), b = saddle_point_radical(q, x);
      CHECK(rel(a, b) <= 1e-12);
      CHECK(a > 0.0);
      CHECK(a < 1.0);
      CHECK(saddle_point(q, 1.0 / x) == doctest::Approx(-a).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(saddle_point(0.5, 2.0), std::domain_error);
  CHECK_THROWS_AS(saddle_point(1.0, 0.0), std::domain_error);
}

TEST_CASE("rate function and its derivatives") {
  for (double q : {1.0, 2.0, 3.5})
    for (double x : {0.3, 1.0, 4.0}) CHECK(rate_function(q, x, 0.0) == 0.0);

  for (double q : grid(1.0, 8.0, 8)) {
    for (double x : grid(1.05, 10.0, 25)) {
      double y = saddle_point(q, x);
      double F = rate_function(q, x, y);
      double h = 1e-6;
      double fd = (rate_function(q, x, y + h) - rate_function(q, x, y - h)) / (2 * h);
      CHECK(std::abs(fd) <= 1e-8 * (1.0 + std::abs(F)));
      CHECK(std::abs(rate_function_dy(q, x, y)) <= 1e-12);
      double fd2 = (rate_function(q, x, y + 1e-4) - 2 * F + rate_function(q, x, y - 1e-4)) / 1e-8;
      CHECK(rate_function_d2y(q, y) == doctest::Approx(fd2).epsilon(1e-5));
      // the saddle is a maximum along y
      CHECK(rate_function(q, x, y) >= rate_function(q, x, y * 0.9));
      CHECK(rate_function(q, x, y) >= rate_function(q, x, std::min(0.999, y * 1.1)));
    }
  }
  for (double q : {1.0, 2.0, 4.0}) {
    for (double rho : grid(0.05, 0.95, 19)) {
      double a = rate_function(q, 1.0 / rho, saddle_point(q, 1.0 / rho));
      double b = rate_function(q, rho, saddle_point(q, rho));
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(rate_function(1.0, 2.0, 1.0), std::domain_error);
}

TEST_CASE("prefactor H: definition equals the simplified form") {
  for (double q : grid(1.0, 8.0, 8))
    for (double y : grid(-0.95, 0.95, 39)) {
      CHECK(h_prefactor(q, y) == doctest::Approx(h_prefactor_closed(q, y)).epsilon(1e-13));
    }
}

TEST_CASE("rate Phi") {
  for (double rho : grid(0.01, 0.99, 99)) CHECK(std::abs(phi_rate(1.0, rho)) <= 1e-12);
  for (double q : grid(1.0, 8.0, 15))
    for (double rho : grid(0.02, 0.98, 49)) {
      CHECK(phi_rate(q, rho) >= -1e-14);
      CHECK(phi_hat(q, rho) == doctest::Approx(phi_rate(q, rho) / (q + 1)));
    }
  for (double q : {1.5, 2.0, 4.0}) {
    double prev = phi_rate(q, 0.9);
    for (double rho : {0.99, 0.999, 0.9999}) {
      double p = phi_rate(q, rho);
      CHECK(p < prev);
      prev = p;
    }
    CHECK(phi_rate(q, 0.99999) < 1e-8);
  }
  CHECK_THROWS_AS(phi_rate(2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(psi_prefactor(2.0, 0.0), std::domain_error);
}

TEST_CASE("Psi is one on the diagonal ray") {
  for (double rho : grid(0.01, 0.99, 50)) CHECK(psi_prefactor(1.0, rho) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rescaled exact moments") {
  for (double rho : {-0.7, 0.0, 0.2, 0.9, 1.0}) {
    CHECK(rescaled_exact(8, 8, rho) == doctest::Approx(1.0));
    CHECK(rescaled_exact(7, 7, rho) == doctest::Approx(1.0));
  }
  for (std::size_t u = 1; u <= 6; ++u)
    for (std::size_t v = 1; v <= 6; ++v) {
      double expect = catalan(u + v).convert_to<double>() /
                      std::sqrt(catalan(2 * u).convert_to<double>() * catalan(2 * v).convert_to<double>());
      CHECK(rescaled_exact(2 * u, 2 * v, 1.0) == doctest::Approx(expect).epsilon(1e-13));
    }
  {
    double r = 0.5, r2 = r * r;
    double p48 = 28 * std::pow(r, 6) + 84 * r2 * r2 + 20 * r2;
    double p44 = evaluate(block_moment(4, 4), r), p88 = evaluate(block_moment(8, 8), r);
    CHECK(rescaled_exact(4, 8, r) == doctest::Approx(p48 / std::sqrt(p44 * p88)).epsilon(1e-14));
  }
  CHECK(rescaled_exact(6, 2, 0.0) == 0.0);
  CHECK_THROWS_AS(rescaled_exact(3, 2, 0.5), std::invalid_argument);
  for (std::size_t n = 0; n <= 30; n += 3)
    for (std::size_t m = n % 2; m <= 30; m += 2)
      for (double rho : grid(-1.0, 1.0, 21)) CHECK(std::abs(rescaled_exact(n, m, rho)) <= 1.0 + 1e-12);
  for (std::size_t n : {40, 200, 900})
    for (std::size_t m : {40, 300, 1000}) {
      if (n % 2 != m % 2) continue;
      for (double rho : {-0.6, 0.3, 0.8, 1.0}) {
        CHECK(rescaled_exact_log_space(n, m, rho) == doctest::Approx(rescaled_exact(n, m, rho)).epsilon(1e-9));
      }
    }
}

TEST_CASE("estimate converges along rays") {
  for (double q : {1.5, 2.0, 3.0}) {
    for (double rho : {0.3, 0.5, 0.8}) {
      double prev = INFINITY;
      for (std::size_t v : {50, 100, 200, 400}) {
        auto u = static_cast<std::size_t>(q * v);
        double err = std::abs(rescaled_exact(2 * u, 2 * v, rho) / rescaled_estimate(u, v, rho) - 1.0);
        CAPTURE(q);
        CAPTURE(rho);
        CAPTURE(v);
        CHECK(err < prev);
        prev = err;
      }
      CHECK(prev < 0.01);
    }
  }
  // q = 1: exact value and estimate are both one
  CHECK(rescaled_estimate(30, 30, 0.4) == doctest::Approx(1.0).epsilon(1e-12));
  // negative rho picks up (-1)^{u+v}
  CHECK(rescaled_estimate(101, 50, -0.5) == doctest::Approx(-rescaled_estimate(101, 50, 0.5)));
  CHECK(rescaled_estimate(100, 50, -0.5) == doctest::Approx(rescaled_estimate(100, 50, 0.5)));
  CHECK(rescaled_exact(202, 100, -0.5) == doctest::Approx(-rescaled_exact(202, 100, 0.5)));
  CHECK_THROWS_AS(rescaled_estimate(10, 20, 0.5), std::domain_error);
  CHECK_THROWS_AS(rescaled_estimate(20, 10, 1.0), std::domain_error);
  CHECK_THROWS_AS(rescaled_estimate(20, 10, 0.0), std::domain_error);
}

TEST_CASE("plateau at rho = 1") {
  CHECK(rescaled_plateau(1.0) == 1.0);
  for (double q : {2.0, 3.0}) {
    double prev = INFINITY;
    for (std::size_t v : {25, 100, 400}) {
      auto u = static_cast<std::size_t>(q * v);
      double err = std::abs(rescaled_exact(2 * u, 2 * v, 1.0) / rescaled_plateau(q) - 1.0);
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev < 5e-3);
  }
}

TEST_CASE("unrescaled log estimates") {
  for (std::size_t s : {10, 100, 1000}) {
    double err = std::abs(log_moment_near_one(s / 2, s - s / 2) - log_abs(catalan(s)));
    CHECK(err < 2.0 / s);
  }
  // log error decays like 1/v
  for (double q : {1.0, 2.0}) {
    for (double rho : {0.4, 0.7}) {
      std::vector<double> errs;
      for (std::size_t v : {50, 100, 200}) {
        auto u = static_cast<std::size_t>(q * v);
        double exact = log_abs_evaluate(block_moment(2 * u, 2 * v), rho);
        errs.push_back(std::abs(exact - log_moment_estimate(u, v, rho)));
      }
      CHECK(errs[0] / errs[1] == doctest::Approx(2.0).epsilon(0.1));
      CHECK(errs[1] / errs[2] == doctest::Approx(2.0).epsilon(0.1));
      CHECK(errs[2] < 0.05);
    }
  }
}

TEST_CASE("regime diagnostic") {
  auto d = classify_regime(2.0, 200, 0.3);
  CHECK(d.regime == Regime::interior_saddle);
  CHECK(d.saddle == doctest::Approx(std::abs(saddle_point(2.0, 0.3))));
  CHECK(classify_regime(2.0, 10, 0.99).regime == Regime::boundary_layer);
  // widths shrink like v^{-1/2}
  CHECK(classify_regime(2.0, 400, 0.5).width == doctest::Approx(classify_regime(2.0, 100, 0.5).width / 2));
}

TEST_CASE("summary bundles the pieces") {
  AsymptoticParams p{2.0, 0.5, 100};
  AsymptoticSummary s = summarize(p);
  CHECK(s.saddle == saddle_point(2.0, 0.5));
  CHECK(s.psi == psi_prefactor(2.0, 0.5));
  CHECK(s.phi == phi_rate(2.0, 0.5));
  CHECK(s.estimate == doctest::Approx(rescaled_estimate(200, 100, 0.5)));
  CHECK_THROWS_AS(summarize({0.5, 0.5, 10}), std::domain_error);
  CHECK_THROWS_AS(summarize({2.0, 1.0, 10}), std::domain_error);
  CHECK_THROWS_AS(summarize({2.0, 0.5, 0}), std::domain_error);
}

}  // TEST_SUITE
