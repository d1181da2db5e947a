#include "fracpolya/bounds.hpp"

#include <cmath>
#include <numbers>

#include "fracpolya/errors.hpp"
#include "fracpolya/specfun.hpp"

namespace fracpolya::bounds {

using specfun::log_gamma;
using std::numbers::pi;

std::string_view to_string(EstimateKind kind) {
  switch (kind) {
    case EstimateKind::RitzUpper:
      return "RitzUpper";
    case EstimateKind::ClosedFormUpper:
      return "ClosedFormUpper";
    case EstimateKind::AsymptoticApprox:
      return "AsymptoticApprox";
    case EstimateKind::LinearUpper:
      return "LinearUpper";
    case EstimateKind::TableUpper:
      return "TableUpper";
    case EstimateKind::LowerSumBound:
      return "LowerSumBound";
    case EstimateKind::PolyaTerm:
      return "PolyaTerm";
  }
  return "Unknown";
}

bool is_upper_bound(EstimateKind kind) {
  switch (kind) {
    case EstimateKind::RitzUpper:
    case EstimateKind::ClosedFormUpper:
    case EstimateKind::LinearUpper:
    case EstimateKind::TableUpper:
      return true;
    default:
      return false;
  }
}

double bk_upper(FractionalOrder alpha, Dimension d) {
  const double a = alpha;
  const double h = 0.5 * d.d;
  const double log_value = (a + 1.0) * std::numbers::ln2 +
                           2.0 * log_gamma(0.5 * a + 1.0) +
                           log_gamma(h + a + 1.0) - std::log(d.d + a) -
                           log_gamma(a + 1.0) - log_gamma(h);
  return std::exp(log_value);
}

double bk_upper_2d(FractionalOrder alpha) {
  const double a = alpha;
  const double log_value = (a + 1.0) * std::numbers::ln2 + std::log(a + 1.0) +
                           2.0 * log_gamma(0.5 * a + 1.0) - std::log(a + 2.0);
  return std::exp(log_value);
}

double dkk_upper_2d(FractionalOrder alpha) {
  const double a = alpha;
  const double log_value = (a - 1.0) * std::numbers::ln2 + std::log(a + 2.0) +
                           std::log(7.0 * a + 24.0) +
                           2.0 * log_gamma(0.5 * a + 1.0) - std::log(a + 4.0) -
                           std::log(a + 6.0);
  return std::exp(log_value);
}

PQRTriple dyda_pqr(FractionalOrder alpha) {
  const double a = alpha;
  const double lg = log_gamma(0.5 * a + 1.0);
  const double pi2 = pi * pi;
  const double P =
      pi2 * std::exp((a - 1.0) * std::numbers::ln2 + std::log(a + 4.0) +
                     std::log(a * a + 3.0 * a + 6.0) + 2.0 * lg -
                     std::log(a + 1.0) - std::log(a + 3.0) - std::log(a + 6.0));
  const double Q =
      pi2 * std::exp(2.0 * (a + 1.0) * std::numbers::ln2 + std::log(a + 2.0) +
                     4.0 * lg - std::log(a + 6.0));
  const double R = pi2 * (a + 4.0) * (a + 4.0) /
                   (4.0 * (a + 1.0) * (a + 2.0) * (a + 2.0) * (a + 3.0));
  return {P, Q, R};
}

double dyda_upper_2d(FractionalOrder alpha) {
  const auto [P, Q, R] = dyda_pqr(alpha);
  double disc = P * P - Q * R;
  if (disc < -1e-10 * P * P) {
    throw ConsistencyError("negative discriminant in Dyda bound at alpha = " +
                           std::to_string(alpha.value()));
  }
  if (disc < 0.0) disc = 0.0;
  // Rationalized form of (P - sqrt(disc)) / (2R); no cancellation.
  return Q / (2.0 * (P + std::sqrt(disc)));
}

double partii_logform(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 2.0)) {
    throw DomainError("partii_logform requires alpha in [0, 2]");
  }
  const double a = alpha;
  return 2.0 * log_gamma(0.5 * a + 2.0) -
         std::log((a + 2.0) / (7.0 * a + 24.0)) - std::log(a + 4.0) -
         std::log(a + 6.0) + std::numbers::ln2;
}

double kwasnicki_asymptotic(long n, FractionalOrder alpha) {
  if (n < 1) throw DomainError("kwasnicki_asymptotic requires n >= 1");
  const double a = alpha;
  const double base = n * pi / 2.0 - (2.0 - a) * pi / 8.0;
  if (!(base > 0.0)) throw DomainError("kwasnicki_asymptotic: base <= 0");
  return std::pow(base, a);
}

double kwasnicki_relative_correction(long n, FractionalOrder alpha) {
  if (n < 1) throw DomainError("kwasnicki_relative_correction requires n >= 1");
  const double a = alpha;
  return 1.0 - a * (2.0 - a) / (4.0 * static_cast<double>(n));
}

double kkms_linear_upper(long n) {
  if (n < 4) throw DomainError("linear bound holds only for n >= 4");
  return n * pi / 2.0 - pi / 40.0;
}

double kkms_table_upper(long n) {
  switch (n) {
    case 1:
      return 1.16;
    case 2:
      return 2.76;
    case 3:
      return 4.32;
    default:
      throw DomainError("tabulated bound exists only for n in {1, 2, 3}");
  }
}

double liyau_lower_sum(long n, FractionalOrder alpha, double length) {
  if (n < 1) throw DomainError("liyau_lower_sum requires n >= 1");
  if (!(length > 0.0)) throw DomainError("liyau_lower_sum requires L > 0");
  const double a = alpha;
  return std::pow(pi / length, a) * std::pow(static_cast<double>(n), 1.0 + a) /
         (1.0 + a);
}

double scale_interval_estimate(double value, FractionalOrder alpha,
                               double from_length, double to_length) {
  if (!(value > 0.0)) throw DomainError("estimate must be positive");
  if (!(from_length > 0.0) || !(to_length > 0.0)) {
    throw DomainError("interval lengths must be positive");
  }
  if (from_length == to_length) return value;
  return value * std::pow(from_length / to_length, alpha.value());
}

}  // namespace fracpolya::bounds
