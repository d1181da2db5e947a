#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "fracpolya/bounds.hpp"
#include "fracpolya/ritz.hpp"

namespace fracpolya::verdicts {

using Json = nlohmann::ordered_json;

enum class Verdict { CounterexampleConfirmed, Inconclusive, BoundTooWeak };

std::string_view to_string(Verdict v);

// Where the expected outcome of a check comes from.
enum class Provenance { Paper, Trivial, Derived };

std::string_view to_string(Provenance p);

// One estimate compared with the Weyl term (n C_d / V)^{alpha/d}.
struct DeficitRecord {
  bounds::EigenEstimate estimate;
  double polya;
  double deficit;  // estimate.value - polya
  Verdict verdict;
  // Set for estimates that are not rigorous upper bounds; such records never
  // confirm a counterexample.
  bool heuristic;
};

DeficitRecord classify_deficit(const bounds::EigenEstimate& estimate,
                               double margin);

// Records for n <= N/4, the part of a Ritz spectrum that is trusted.
std::vector<DeficitRecord> polya_check_interval(const RitzSpectrum& spectrum,
                                                double margin = 1e-6);

struct ThresholdResult {
  std::string bound_name;
  std::string target_name;
  double alpha_star;
  double lo;
  double hi;
  double residual;
  int iterations;
};

// Plain bisection down to hi - lo <= tol. Throws BracketingError when f(lo)
// and f(hi) have the same sign and NumericError on a non-finite value.
ThresholdResult bisect_threshold(const std::function<double(double)>& f,
                                 double lo, double hi, double tol);

// Scans f on lo, lo + step, ..., hi for the first sign change and bisects
// inside it.
ThresholdResult scan_and_bisect(const std::function<double(double)>& f,
                                double lo, double hi, double step, double tol);

// Crossings of the three unit-disk bounds with 2^alpha: BK, DKK, Dyda.
std::vector<ThresholdResult> disk_thresholds(double tol);

struct NonexistenceRecord {
  std::string bound_name;
  std::string target_name;
  double grid_step;
  double min_gap;
  double argmin;
  bool holds;  // bound >= target at every grid point
};

struct SquareThresholds {
  std::vector<ThresholdResult> crossings;  // Dyda, DKK vs pi^{alpha/2}
  NonexistenceRecord bk_no_crossing;
};

SquareThresholds square_thresholds(double tol);

// One line of a verdict report.
struct CheckRecord {
  std::string name;
  bool passed;
  bool heuristic = false;
  Provenance provenance = Provenance::Derived;
  Json detail = Json::object();
};

struct VerdictReport {
  std::string suite;
  Json parameters = Json::object();
  std::vector<CheckRecord> records;

  bool overall() const;
  void add(CheckRecord record) { records.push_back(std::move(record)); }
};

Json to_json(const VerdictReport& report);
Json to_json(const DeficitRecord& record);
Json to_json(const ThresholdResult& result);
Json to_json(const NonexistenceRecord& record);

// Memoizes Ritz spectra by (alpha, L, N) so suites can share solves.
class SpectrumSource {
 public:
  explicit SpectrumSource(QuadratureSpec quad = {},
                          AssemblyOptions options = {})
      : quad_(quad), options_(std::move(options)) {}

  const RitzSpectrum& get(double alpha, double length, long basis_size);
  const StiffnessMatrix& matrix(double alpha, double length, long basis_size);

  const QuadratureSpec& quadrature() const { return quad_; }

 private:
  using Key = std::tuple<double, double, long>;
  QuadratureSpec quad_;
  AssemblyOptions options_;
  std::map<Key, StiffnessMatrix> matrices_;
  std::map<Key, RitzSpectrum> spectra_;
};

// Suites. Each returns a self-contained report.

VerdictReport polya_suite(const RitzSpectrum& spectrum, double margin = 1e-6);

VerdictReport liyau_check(const RitzSpectrum& spectrum);

// Requires alpha = 1. The upper side is tagged heuristic and checked only for
// n <= N/4.
VerdictReport two_sided_check_alpha1(const RitzSpectrum& spectrum);

// Requires an ascending grid of at least three orders; spectra[i] belongs to
// alpha_grid[i] and all share L and N.
VerdictReport monotonicity_check(long n_max,
                                 const std::vector<RitzSpectrum>& spectra,
                                 double tol_rel = 1e-3,
                                 double terminal_tol = 1e-6);

VerdictReport monotonicity_check(long n_max,
                                 const std::vector<double>& alpha_grid,
                                 double length, long basis_size,
                                 SpectrumSource& source);

struct WeylOptions {
  long n_lo = 8;
  long n_hi = 64;
  double ritz_margin = 5e-3;
  double slope_tol = 0.05;
};

// r_n = lambda_n / (n pi/L)^alpha against 1 - alpha(2-alpha)/(4n), and the
// least-squares coefficient s in 1 - r_n ~ s / n (fit through the origin),
// compared with alpha(2 - alpha)/4.
VerdictReport weyl_ratio_check(const RitzSpectrum& spectrum,
                               const WeylOptions& options = {});

// Requires alpha = 1, L = 2.
VerdictReport kkms_consistency_check(const RitzSpectrum& spectrum,
                                     double ritz_headroom = 0.05);

struct JensenOptions {
  long basis_size = 32;
  double length = 2.0;
  std::vector<double> alphas = {0.5, 1.0, 1.5, 2.0};
  int vectors = 100;
  unsigned long long seed = 20170101ULL;
  double margin = 1e-8;
};

// form(c, M_alpha) < form(c, M_beta)^{alpha/beta} for seeded unit vectors c.
VerdictReport jensen_check(const JensenOptions& options,
                           SpectrumSource& source);

VerdictReport disk_report(double tol);
VerdictReport square_report(double tol);

// Value at 0, sign at 0.802, and discrete convexity on the 0.01 grid.
VerdictReport partii_report();

}  // namespace fracpolya::verdicts
