#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fracpolya/errors.hpp"
#include "fracpolya/specfun.hpp"
#include "oracles/stirling.hpp"

using namespace fracpolya;
using namespace fracpolya::specfun;
using std::numbers::pi;

TEST_CASE("log_gamma at known points") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(2.0)) < 1e-15);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
}

TEST_CASE("gamma at known points") {
  CHECK(specfun::gamma(1.5) == doctest::Approx(std::sqrt(pi) / 2).epsilon(1e-14));
  CHECK(specfun::gamma(3.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(specfun::gamma(1.25) == doctest::Approx(std::exp(oracle::stirling_log_gamma(1.25)))
                           .epsilon(1e-13));
  CHECK(specfun::gamma(1.25) == doctest::Approx(0.9064024771).epsilon(1e-10));
}

TEST_CASE("log_gamma against the Stirling oracle on a grid") {
  double worst = 0.0;
  for (int i = 1; i <= 500; ++i) {
    const double x = i * 0.1;
    const double ref = oracle::stirling_log_gamma(x);
    worst = std::max(worst, std::abs(log_gamma(x) - ref) /
                                std::max(1.0, std::abs(ref)));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("log_gamma near its zeros keeps relative accuracy") {
  // ln Gamma(1 + z) = -gamma z + sum_k (-1)^k zeta(k) z^k / k
  auto taylor = [](double z) {
    const double euler = 0.57721566490153286;
    const double zeta2 = 1.6449340668482264;
    const double zeta3 = 1.2020569031595943;
    const double zeta4 = 1.0823232337111382;
    return z * (-euler + z * (zeta2 / 2 + z * (-zeta3 / 3 + z * zeta4 / 4)));
  };
  for (double z : {1e-6, -1e-6, 3e-8, -2e-9}) {
    // Offsets actually representable next to 1 and 2.
    const double z1 = (1.0 + z) - 1.0;
    const double z2 = (2.0 + z) - 2.0;
    const double at_one = taylor(z1);
    CHECK(std::abs(log_gamma(1.0 + z1) - at_one) <= 1e-12 * std::abs(at_one));
    const double at_two = std::log1p(z2) + taylor(z2);
    CHECK(std::abs(log_gamma(2.0 + z2) - at_two) <= 1e-12 * std::abs(at_two));
  }
}

TEST_CASE("recurrence Gamma(x+1) = x Gamma(x)") {
  for (int i = 1; i <= 60; ++i) {
    const double x = 0.05 * i;
    CHECK(log_gamma(x + 1) - log_gamma(x) ==
          doctest::Approx(std::log(x)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("log_gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
  CHECK_THROWS_AS(specfun::gamma(-0.5), DomainError);
}

TEST_CASE("unit ball volumes and Weyl constants") {
  CHECK(unit_ball_volume(Dimension(1)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(unit_ball_volume(Dimension(2)) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(unit_ball_volume(Dimension(3)) == doctest::Approx(4 * pi / 3).epsilon(1e-14));
  CHECK(weyl_constant(Dimension(1)) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(weyl_constant(Dimension(2)) == doctest::Approx(4 * pi).epsilon(1e-14));
  CHECK(weyl_constant(Dimension(3)) == doctest::Approx(6 * pi * pi).epsilon(1e-14));
  for (int d = 1; d <= 10; ++d) {
    CHECK(unit_ball_volume(Dimension(d)) * weyl_constant(Dimension(d)) ==
          doctest::Approx(std::pow(2 * pi, d)).epsilon(1e-13));
  }
  CHECK_THROWS(Dimension(0));
}

TEST_CASE("polya_term on the three domains") {
  for (double a : {0.3, 1.0, 1.7, 2.0}) {
    CHECK(polya_term(1, DomainSpec::unit_disk(), a) ==
          doctest::Approx(std::exp2(a)).epsilon(1e-14));
    CHECK(polya_term(1, DomainSpec::square(), a) ==
          doctest::Approx(std::pow(pi, a / 2)).epsilon(1e-14));
    for (long n : {1L, 7L, 100L}) {
      CHECK(polya_term(n, DomainSpec::interval(2.0), a) ==
            doctest::Approx(std::pow(n * pi / 2, a)).epsilon(1e-14));
      CHECK(polya_term(n, DomainSpec::interval(3.5), a) ==
            doctest::Approx(std::pow(n * pi / 3.5, a)).epsilon(1e-14));
    }
  }
}

TEST_CASE("polya_term is increasing in n") {
  const auto dom = DomainSpec::interval(2.0);
  for (double a : {0.1, 1.0, 2.0}) {
    for (long n = 1; n < 50; ++n) {
      CHECK(polya_term(n, dom, a) < polya_term(n + 1, dom, a));
    }
  }
  CHECK_THROWS(polya_term(0, dom, 1.0));
}
