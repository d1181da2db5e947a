#include "doctest.h"

#include <cmath>
#include <numbers>

#include "fracpolya/bounds.hpp"
#include "fracpolya/errors.hpp"
#include "fracpolya/specfun.hpp"

using namespace fracpolya;
using namespace fracpolya::bounds;
using std::numbers::pi;

namespace {
FractionalOrder fo(double a) { return FractionalOrder(a); }
}  // namespace

TEST_CASE("FractionalOrder validates (0, 2]") {
  CHECK_THROWS_AS(FractionalOrder(0.0), DomainError);
  CHECK_THROWS_AS(FractionalOrder(2.0000001), DomainError);
  CHECK_THROWS_AS(FractionalOrder(std::nan("")), DomainError);
  CHECK(FractionalOrder(2.0).value() == 2.0);
}

TEST_CASE("bk bound examples") {
  CHECK(bk_upper_2d(fo(1e-12)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(bk_upper_2d(fo(1.0)) == doctest::Approx(2 * pi / 3).epsilon(1e-13));
  CHECK(bk_upper_2d(fo(2.0)) == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(bk_upper_2d(fo(0.699)) == doctest::Approx(std::exp2(0.699)).epsilon(1e-3));
}

TEST_CASE("bk in dimension 2 matches the substituted form") {
  for (int i = 1; i <= 200; ++i) {
    const double a = 0.01 * i;
    CHECK(bk_upper(fo(a), Dimension(2)) ==
          doctest::Approx(bk_upper_2d(fo(a))).epsilon(1e-12));
  }
}

TEST_CASE("dkk bound examples") {
  CHECK(dkk_upper_2d(fo(1e-12)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dkk_upper_2d(fo(1.0)) == doctest::Approx(93 * pi / 140).epsilon(1e-13));
  CHECK(dkk_upper_2d(fo(0.802)) == doctest::Approx(std::exp2(0.802)).epsilon(1e-3));
}

TEST_CASE("dyda coefficients") {
  const auto small = dyda_pqr(fo(1e-12));
  CHECK(small.P == doctest::Approx(2 * pi * pi / 3).epsilon(1e-9));
  CHECK(small.Q == doctest::Approx(4 * pi * pi / 3).epsilon(1e-9));
  CHECK(small.R == doctest::Approx(pi * pi / 3).epsilon(1e-9));
  const auto two = dyda_pqr(fo(2.0));
  CHECK(two.P == doctest::Approx(1.6 * pi * pi).epsilon(1e-13));
  CHECK(two.Q == doctest::Approx(32 * pi * pi).epsilon(1e-13));
  CHECK(two.R == doctest::Approx(0.0375 * pi * pi).epsilon(1e-13));
  for (int i = 1; i <= 20; ++i) {
    const auto t = dyda_pqr(fo(0.1 * i));
    CHECK(t.P * t.P >= t.Q * t.R);
  }
}

TEST_CASE("dyda bound examples") {
  CHECK(dyda_upper_2d(fo(1e-12)) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(dyda_upper_2d(fo(2.0)) == doctest::Approx(5.7841).epsilon(1e-4));
  CHECK(dyda_upper_2d(fo(2.0)) > 5.78319);
  CHECK(dyda_upper_2d(fo(0.984)) == doctest::Approx(std::exp2(0.984)).epsilon(1e-3));
}

TEST_CASE("disk bounds sit below 2^alpha up to their thresholds") {
  for (int i = 1; i <= 2000; ++i) {
    const double a = 0.001 * i;
    const double target = std::exp2(a);
    if (a <= 0.699 - 1e-3) CHECK(bk_upper_2d(fo(a)) < target);
    if (a <= 0.802 - 1e-3) CHECK(dkk_upper_2d(fo(a)) < target);
    if (a <= 0.984 - 1e-3) CHECK(dyda_upper_2d(fo(a)) < target);
  }
}

TEST_CASE("disk bounds exceed the true first eigenvalue at alpha = 2") {
  const double j01_squared = 5.783185962946784;
  CHECK(bk_upper_2d(fo(2.0)) > j01_squared);
  CHECK(dkk_upper_2d(fo(2.0)) > j01_squared);
  CHECK(dyda_upper_2d(fo(2.0)) > j01_squared);
}

TEST_CASE("partii logform") {
  CHECK(std::abs(partii_logform(0.0)) <= 1e-12);
  CHECK(partii_logform(0.802) < 0.0);
  CHECK(partii_logform(1.0) == doctest::Approx(std::log(93 * pi / 280)).epsilon(1e-12));
  CHECK(partii_logform(1.0) == doctest::Approx(0.0428).epsilon(1e-2));
  for (int i = 1; i <= 200; ++i) {
    const double a = 0.01 * i;
    CHECK(partii_logform(a) ==
          doctest::Approx(std::log(dkk_upper_2d(fo(a)) / std::exp2(a)))
              .epsilon(1e-12)
              .scale(1.0));
  }
  for (int i = 1; i < 200; ++i) {
    const double second = partii_logform(0.01 * (i - 1)) -
                          2 * partii_logform(0.01 * i) +
                          partii_logform(0.01 * (i + 1));
    CHECK(second >= -1e-9);
  }
  CHECK_THROWS(partii_logform(-0.1));
  CHECK_THROWS(partii_logform(2.1));
}

TEST_CASE("interval asymptotics") {
  CHECK(kwasnicki_asymptotic(1, fo(1.0)) == doctest::Approx(3 * pi / 8).epsilon(1e-14));
  CHECK(kwasnicki_asymptotic(1, fo(2.0)) == doctest::Approx(pi * pi / 4).epsilon(1e-14));
  CHECK(kwasnicki_asymptotic(10, fo(1.0)) == doctest::Approx(39 * pi / 8).epsilon(1e-14));
  CHECK(kwasnicki_relative_correction(1, fo(2.0)) == 1.0);
  CHECK(kwasnicki_relative_correction(4, fo(1.0)) == doctest::Approx(0.9375));
  CHECK(kwasnicki_relative_correction(20, fo(1.0)) == doctest::Approx(0.9875));
}

TEST_CASE("KKMS bounds") {
  CHECK(kkms_linear_upper(4) == doctest::Approx(2 * pi - pi / 40).epsilon(1e-14));
  CHECK(kkms_linear_upper(10) == doctest::Approx(5 * pi - pi / 40).epsilon(1e-14));
  CHECK(kkms_linear_upper(100) == doctest::Approx(50 * pi - pi / 40).epsilon(1e-14));
  CHECK_THROWS_AS(kkms_linear_upper(3), DomainError);
  CHECK(kkms_table_upper(1) == 1.16);
  CHECK(kkms_table_upper(2) == 2.76);
  CHECK(kkms_table_upper(3) == 4.32);
  CHECK_THROWS(kkms_table_upper(0));
  CHECK_THROWS(kkms_table_upper(4));
}

TEST_CASE("Li-Yau lower sums") {
  CHECK(liyau_lower_sum(1, fo(1.0), 2.0) == doctest::Approx(pi / 4).epsilon(1e-14));
  CHECK(liyau_lower_sum(5, fo(1.0), 2.0) == doctest::Approx(25 * pi / 4).epsilon(1e-14));
  for (long n : {1L, 3L, 40L}) {
    CHECK(liyau_lower_sum(n, fo(2.0), 3.0) ==
          doctest::Approx(std::pow(pi / 3.0, 2) * n * n * n / 3).epsilon(1e-13));
  }
}

TEST_CASE("scaling between interval lengths") {
  CHECK(scale_interval_estimate(1.7, fo(0.6), 2.0, 2.0) == doctest::Approx(1.7));
  CHECK(scale_interval_estimate(1.16, fo(1.0), 2.0, 4.0) == doctest::Approx(0.58));
  for (double a : {0.4, 1.3, 2.0}) {
    CHECK(scale_interval_estimate(std::pow(3 * pi / 2, a), fo(a), 2.0, 5.0) ==
          doctest::Approx(std::pow(3 * pi / 5, a)).epsilon(1e-13));
  }
}

TEST_CASE("estimate kinds") {
  CHECK(is_upper_bound(EstimateKind::RitzUpper));
  CHECK(is_upper_bound(EstimateKind::ClosedFormUpper));
  CHECK(is_upper_bound(EstimateKind::LinearUpper));
  CHECK(is_upper_bound(EstimateKind::TableUpper));
  CHECK_FALSE(is_upper_bound(EstimateKind::AsymptoticApprox));
  CHECK_FALSE(is_upper_bound(EstimateKind::LowerSumBound));
  CHECK_FALSE(is_upper_bound(EstimateKind::PolyaTerm));
}
