#include "doctest.h"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fracpolya/errors.hpp"
#include "fracpolya/quadrature.hpp"
#include "fracpolya/stiffness.hpp"
#include "oracles/fourier.hpp"

using namespace fracpolya;
using std::numbers::pi;

namespace {

double oracle_product(long j, long k, double length, double xi) {
  const auto a = oracle::sine_transform(j, length, xi);
  const auto b = oracle::sine_transform(k, length, xi);
  return a.re * b.re + a.im * b.im;
}

// Integral of xi^power * sine_ft_product over [lo, hi] on panels of width
// pi / (4L), 16-point Gauss-Legendre each.
double panel_integral(long j, long k, double length, double power, double lo,
                      double hi) {
  const auto rule = gauss_legendre(16);
  const double width = pi / (4 * length);
  const long panels = static_cast<long>(std::ceil((hi - lo) / width));
  const double h = (hi - lo) / panels;
  double sum = 0.0;
  for (long p = 0; p < panels; ++p) {
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double xi = lo + h * (p + rule.nodes[i]);
      sum += h * rule.weights[i] * std::pow(xi, power) *
             sine_ft_product(j, k, length, xi);
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("Gauss-Legendre rule on [0, 1]") {
  for (int n : {2, 5, 16, 24}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], deg);
      CHECK(sum == doctest::Approx(1.0 / (deg + 1)).epsilon(1e-13));
    }
  }
  CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("QuadratureSpec validation") {
  QuadratureSpec q;
  CHECK_NOTHROW(q.validate());
  q.abs_tol = 0.0;
  CHECK_THROWS_AS(q.validate(), InputError);
  q = {};
  q.panel_nodes = 1;
  CHECK_THROWS_AS(q.validate(), InputError);
  q = {};
  q.max_doublings = 0;
  CHECK_THROWS_AS(q.validate(), InputError);
}

TEST_CASE("sine_ft_product matches the complex transform") {
  for (double length : {2.0, 3.3}) {
    for (long j = 1; j <= 6; ++j) {
      for (long k = 1; k <= 6; ++k) {
        for (double xi : {0.0, 0.37, 1.9, 5.5, 13.1, 250.25}) {
          const double ref = oracle_product(j, k, length, xi);
          CHECK(std::abs(sine_ft_product(j, k, length, xi) - ref) <=
                1e-15 + 1e-11 * std::abs(ref));
        }
      }
    }
  }
}

TEST_CASE("sine_ft_product parity and values at the origin") {
  for (double xi : {0.0, 0.5, 2.0, 40.0}) {
    CHECK(sine_ft_product(1, 2, 2.0, xi) == 0.0);
    CHECK(sine_ft_product(4, 7, 2.0, xi) == 0.0);
  }
  CHECK(std::abs(sine_ft_product(2, 2, 2.0, 0.0)) < 1e-30);
  CHECK(sine_ft_product(1, 1, 2.0, 0.0) ==
        doctest::Approx(oracle_product(1, 1, 2.0, 0.0)).epsilon(1e-14));
  CHECK(sine_ft_product(3, 3, 2.0, -1.3) == sine_ft_product(3, 3, 2.0, 1.3));
}

TEST_CASE("removable singularity at xi = k pi / L") {
  for (double length : {2.0, pi}) {
    for (long k : {1L, 2L, 5L}) {
      const double a = k * pi / length;
      const double at = sine_ft_product(k, k, length, a);
      const double beside = 0.5 * (oracle_product(k, k, length, a - 1e-6) +
                                   oracle_product(k, k, length, a + 1e-6));
      CHECK(at == doctest::Approx(beside).epsilon(1e-8));
      // Limit of |s_k^|^2 at its own frequency is L / (4 pi).
      CHECK(at == doctest::Approx(length / (4 * pi)).epsilon(1e-12));
    }
  }
}

TEST_CASE("Plancherel: each basis function has unit L2 norm") {
  const double cutoff = 2000.0;
  for (long k = 1; k <= 8; ++k) {
    const double a = k * pi / 2.0;
    const double body = 2.0 * panel_integral(k, k, 2.0, 0.0, 0.0, cutoff);
    // (2/(pi L)) a^2 / (3 cutoff^3) on each half-line
    const double tail = 2.0 * (2.0 / (pi * 2.0)) * a * a /
                        (3 * cutoff * cutoff * cutoff);
    CHECK(body + tail == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("stiffness entries: parity, alpha = 2 and the A11 bracket") {
  const QuadratureSpec quad;
  CHECK(std::abs(stiffness_entry(1, 2, FractionalOrder(1.0), 2.0, quad)) <= quad.abs_tol);
  for (double length : {2.0, pi, 0.7}) {
    for (long n = 1; n <= 8; ++n) {
      const double exact = std::pow(n * pi / length, 2);
      CHECK(std::abs(stiffness_entry(n, n, FractionalOrder(2.0), length, quad) -
                     exact) <= std::max(quad.abs_tol, 1e-13 * exact));
    }
  }
  const double a11 = stiffness_entry(1, 1, FractionalOrder(1.0), 2.0, quad);
  CHECK(a11 > 1.15);
  CHECK(a11 < pi / 2);
  CHECK(std::abs(a11 - oracle::a11_alpha1(2.0, 1e-4, 1e4)) <= 1e-9);
}

TEST_CASE("stiffness entries reject bad input") {
  const QuadratureSpec quad;
  CHECK_THROWS_AS(stiffness_entry(0, 1, FractionalOrder(1.0), 2.0, quad), DomainError);
  CHECK_THROWS(stiffness_entry(1, 1, FractionalOrder(1.0), -2.0, quad));
  QuadratureSpec coarse;
  coarse.panel_nodes = 2;
  CHECK_THROWS_AS(stiffness_entry(3, 5, FractionalOrder(0.5), 2.0, coarse), InputError);
  CHECK_THROWS_AS(assemble_stiffness(6, FractionalOrder(0.5), 2.0, coarse), InputError);
}

TEST_CASE("one doubling suffices even with the smallest admissible rule") {
  QuadratureSpec q;
  q.panel_nodes = 8;
  q.max_doublings = 1;
  q.abs_tol = 1e-14;
  for (double a : {0.01, 1.0, 1.99}) {
    CHECK_NOTHROW(stiffness_entry(41, 41, FractionalOrder(a), 2.0, q));
  }
  const QuadratureConvergenceError e("stalled", 1.5, 1.25);
  const NumericError& base = e;
  CHECK(std::string(base.what()) == "stalled");
  CHECK(e.previous_estimate() == 1.5);
  CHECK(e.last_estimate() == 1.25);
}

TEST_CASE("tail expansion against direct integration") {
  for (double alpha : {0.5, 1.0, 1.5}) {
    for (auto [j, k] : {std::pair{1L, 1L}, std::pair{1L, 3L}, std::pair{2L, 4L}}) {
      const long near = 40;
      const long far = 16 * near;
      const double length = 2.0;
      const double xi_near = 2 * pi * near / length;
      const double xi_far = 2 * pi * far / length;
      const auto t_near = detail::sine_tail(j, k, alpha, length, near);
      const auto t_far = detail::sine_tail(j, k, alpha, length, far);
      const double direct =
          2.0 * panel_integral(j, k, length, alpha, xi_near, xi_far) + t_far.value;
      CHECK(std::abs(t_near.value - direct) <= 1e-11);
      CHECK(t_near.error >= 0.0);
      CHECK(t_near.error < 1e-8);
    }
  }
}

TEST_CASE("assembled matrices") {
  const QuadratureSpec quad;
  SUBCASE("alpha = 2 on (0, pi) is diag(1, 4, 9, 16)") {
    const auto m = assemble_stiffness(4, FractionalOrder(2.0), pi, quad);
    for (long r = 0; r < 4; ++r) {
      for (long c = 0; c < 4; ++c) {
        const double expect = r == c ? (r + 1.0) * (r + 1.0) : 0.0;
        CHECK(std::abs(m(r, c) - expect) <= quad.abs_tol);
      }
    }
  }
  SUBCASE("parity zeros are exact") {
    const auto m = assemble_stiffness(2, FractionalOrder(1.0), 2.0, quad);
    CHECK(m(0, 1) == 0.0);
    CHECK(m(1, 0) == 0.0);
  }
  SUBCASE("single entry agrees with the assembly") {
    const auto m = assemble_stiffness(12, FractionalOrder(0.7), 2.0, quad);
    for (auto [j, k] : {std::pair{1L, 1L}, std::pair{3L, 9L}, std::pair{12L, 12L}}) {
      CHECK(m(j - 1, k - 1) ==
            doctest::Approx(stiffness_entry(j, k, FractionalOrder(0.7), 2.0, quad))
                .epsilon(1e-10)
                .scale(1.0));
    }
  }
  SUBCASE("exactly symmetric") {
    const auto m = assemble_stiffness(20, FractionalOrder(1.3), 2.5, quad);
    for (long r = 0; r < 20; ++r) {
      for (long c = 0; c < 20; ++c) CHECK(m(r, c) == m(c, r));
    }
  }
  SUBCASE("result does not depend on the thread count") {
    AssemblyOptions one;
    one.threads = 1;
    AssemblyOptions three;
    three.threads = 3;
    const auto a = assemble_stiffness(40, FractionalOrder(0.9), 2.0, quad, one);
    const auto b = assemble_stiffness(40, FractionalOrder(0.9), 2.0, quad, three);
    CHECK(std::equal(a.data().begin(), a.data().end(), b.data().begin()));
  }
  CHECK_THROWS_AS(assemble_stiffness(0, FractionalOrder(1.0), 2.0, quad), InputError);
}

TEST_CASE("N = 8, alpha = 0.5 matrix against the trapezoid oracle") {
  const auto m = assemble_stiffness(8, FractionalOrder(0.5), 2.0, QuadratureSpec{});
  const auto ref = oracle::trapezoid_matrix(8, 0.5, 2.0, 1e-4, 1e4);
  for (long r = 0; r < 8; ++r) {
    for (long c = 0; c < 8; ++c) {
      CHECK(std::abs(m(r, c) - ref[r * 8 + c]) <= 1e-6);
    }
  }
}

TEST_CASE("form_value") {
  const auto m = assemble_stiffness(6, FractionalOrder(1.0), 2.0, QuadratureSpec{});
  std::vector<double> e1(6, 0.0);
  e1[0] = 1.0;
  CHECK(form_value(e1, m) == m(0, 0));
  std::vector<double> mix(6, 0.0);
  mix[0] = mix[2] = std::sqrt(0.5);
  CHECK(form_value(mix, m) ==
        doctest::Approx(0.5 * (m(0, 0) + m(2, 2)) + m(0, 2)).epsilon(1e-14));
  std::vector<double> bad(6, 0.5);
  CHECK_THROWS_AS(form_value(bad, m), InputError);
  CHECK_THROWS_AS(form_value(std::vector<double>{1.0}, m), InputError);
}
