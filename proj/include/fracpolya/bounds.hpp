#pragma once

#include <string_view>

#include "fracpolya/domain.hpp"

namespace fracpolya::bounds {

/// Provenance of a single eigenvalue number.
enum class EstimateKind {
  RitzUpper,
  ClosedFormUpper,
  AsymptoticApprox,
  LinearUpper,
  TableUpper,
  LowerSumBound,
  PolyaTerm,
};

std::string_view to_string(EstimateKind kind);

/// True for kinds that are rigorous upper bounds on lambda_n (up to the
/// stated numerical error) and may therefore certify a counterexample.
bool is_upper_bound(EstimateKind kind);

struct EigenEstimate {
  long n;
  double alpha;
  DomainSpec domain;
  double value;
  EstimateKind kind;
};

struct PQRTriple {
  double P;
  double Q;
  double R;
};

// Unit ball bounds for lambda_1(alpha). All products of gamma values are
// formed in log space.

/// Banuelos-Kulczycki bound in dimension d.
double bk_upper(FractionalOrder alpha, Dimension d);

/// The same bound with d = 2 substituted:
/// 2^{a+1} (a+1) Gamma(a/2+1)^2 / (a+2).
double bk_upper_2d(FractionalOrder alpha);

/// Dyda-Kuznetsov-Kwasnicki bound on the unit disk:
/// 2^{a-1} (a+2)(7a+24) Gamma(a/2+1)^2 / ((a+4)(a+6)).
double dkk_upper_2d(FractionalOrder alpha);

/// Coefficients of Dyda's quadratic bound on the unit disk.
PQRTriple dyda_pqr(FractionalOrder alpha);

/// (P - sqrt(P^2 - QR)) / (2R). Throws ConsistencyError if the discriminant
/// is below -1e-10 P^2.
double dyda_upper_2d(FractionalOrder alpha);

/// log(dkk_upper_2d(alpha) / 2^alpha) written as a sum of convex terms.
/// Accepts alpha in [0, 2].
double partii_logform(double alpha);

/// Leading term (n pi/2 - (2 - a) pi/8)^a of the interval (L = 2) asymptotic.
double kwasnicki_asymptotic(long n, FractionalOrder alpha);

/// 1 - a(2 - a)/(4n): predicted lambda_n / (n pi/2)^a to first order.
double kwasnicki_relative_correction(long n, FractionalOrder alpha);

/// n pi/2 - pi/40, an upper bound for lambda_n(1) on (0, 2) when n >= 4.
double kkms_linear_upper(long n);

/// Published numerical upper bounds for lambda_n(1) on (0, 2), n = 1, 2, 3.
/// Values were rounded up to two decimals, so the true eigenvalue lies in
/// (value - 0.01, value).
double kkms_table_upper(long n);

inline constexpr double kTableRounding = 0.01;

/// Li-Yau type lower bound (pi/L)^a n^{1+a} / (1+a) for sum_{k<=n} lambda_k.
double liyau_lower_sum(long n, FractionalOrder alpha, double length);

/// Rescales an interval eigenvalue from length from_L to length to_L.
double scale_interval_estimate(double value, FractionalOrder alpha,
                               double from_length, double to_length);

}  // namespace fracpolya::bounds
