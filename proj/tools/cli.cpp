#include "fracpolya/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "fracpolya/bounds.hpp"
#include "fracpolya/errors.hpp"
#include "fracpolya/ritz.hpp"
#include "fracpolya/specfun.hpp"
#include "fracpolya/stiffness_cache.hpp"
#include "fracpolya/verdicts.hpp"

#ifndef FRACPOLYA_VERSION
#define FRACPOLYA_VERSION "unknown"
#endif

namespace fracpolya::cli {
namespace {

namespace fs = std::filesystem;
using std::numbers::pi;

// Raised while checking arguments, before any computation starts.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned threads = 0;
  std::string cache_dir;
  double abs_tol = 1e-10;
  int panel_nodes = 16;
  std::string out;
};

struct IntervalArgs {
  double alpha = 1.0;
  double length = 2.0;
  long basis = 256;
  std::optional<long> nmax;
  double margin = 1e-6;
  std::string format = "csv";
};

struct CurveArgs {
  std::string grid = "0.01:2.0:0.01";
  bool thresholds_only = false;
  double tol = 1e-6;
  std::string format = "csv";
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<double> alpha;
  double length = 2.0;
  long basis = 256;
  double margin = 1e-6;
  std::string grid = "0.25:2.0:0.25";
  long nmax = 8;
  int vectors = 100;
  unsigned long long seed = 20170101ULL;
  double tol = 1e-6;
  std::string format = "json";
};

struct ReportArgs {
  std::string out_dir = ".";
  long basis = 256;
  std::string format = "md";
};

// ---------------------------------------------------------------- validation

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

FractionalOrder checked_alpha(double a) {
  try {
    return FractionalOrder(a);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void check_length(double length) {
  require(std::isfinite(length) && length > 0.0, "--length must be positive");
}

void check_basis(long basis) {
  require(basis >= 1 && basis <= 16384, "--basis must lie in [1, 16384]");
}

std::vector<double> checked_grid(const std::string& text) {
  std::vector<double> grid;
  try {
    grid = parse_grid(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  for (double a : grid) checked_alpha(a);
  return grid;
}

QuadratureSpec quadrature_of(const Common& c) {
  QuadratureSpec q;
  q.abs_tol = c.abs_tol;
  q.panel_nodes = c.panel_nodes;
  try {
    q.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return q;
}

std::optional<fs::path> cache_dir_of(const Common& c) {
  if (!c.cache_dir.empty()) return fs::path(c.cache_dir);
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env) {
    return fs::path(env);
  }
  return std::nullopt;
}

AssemblyOptions assembly_of(const Common& c) {
  AssemblyOptions o;
  o.threads = c.threads;
  o.cache_dir = cache_dir_of(c);
  return o;
}

// ------------------------------------------------------------------- output

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json envelope(const std::string& command, const Common& c, Json parameters) {
  const auto dir = cache_dir_of(c);
  parameters["abs_tol"] = c.abs_tol;
  parameters["panel_nodes"] = c.panel_nodes;
  return Json{{"schema_version", kSchemaVersion},
              {"tool", "fracpolya"},
              {"tool_version", FRACPOLYA_VERSION},
              {"command", command},
              {"generated_at", utc_timestamp()},
              {"cache", {{"env", kCacheDirEnv},
                         {"dir", dir ? Json(dir->string()) : Json(nullptr)}}},
              {"parameters", std::move(parameters)}};
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open " + path + " for writing");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void csv_row(std::ostream& os, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) os << ',';
    os << csv_field(f);
    first = false;
  }
  os << '\n';
}

std::string fmt(double v) { return format_number(v); }

void threshold_table(std::ostream& os,
                     const std::vector<verdicts::ThresholdResult>& rows,
                     const verdicts::NonexistenceRecord* none) {
  csv_row(os, {"bound", "target", "alpha_star", "lo", "hi", "residual"});
  for (const auto& t : rows) {
    csv_row(os, {t.bound_name, t.target_name, fmt(t.alpha_star), fmt(t.lo),
                 fmt(t.hi), fmt(t.residual)});
  }
  if (none != nullptr) {
    csv_row(os, {none->bound_name, none->target_name,
                 none->holds ? "none" : "crossing", "", "", fmt(none->min_gap)});
  }
}

// ----------------------------------------------------------------- commands

int cmd_interval(const Common& c, const IntervalArgs& a, std::ostream& out) {
  const auto alpha = checked_alpha(a.alpha);
  check_length(a.length);
  check_basis(a.basis);
  const long nmax = a.nmax.value_or(a.basis / 4);
  require(nmax >= 1 && nmax <= a.basis / 4,
          "--nmax must lie in [1, basis/4]");
  require(a.margin > 0.0, "--margin must be positive");
  const auto quad = quadrature_of(c);
  const auto options = assembly_of(c);

  const auto spectrum =
      ritz_upper_bounds(a.basis, alpha, a.length, quad, options);
  auto records = verdicts::polya_check_interval(spectrum, a.margin);
  records.erase(records.begin() + nmax, records.end());

  Output sink(c.out, out);
  if (a.format == "json") {
    Json rows = Json::array();
    for (const auto& r : records) rows.push_back(verdicts::to_json(r));
    Json doc = envelope("interval", c,
                        Json{{"alpha", a.alpha},
                             {"length", a.length},
                             {"basis", a.basis},
                             {"nmax", nmax},
                             {"margin", a.margin}});
    doc["rows"] = rows;
    *sink << doc.dump(2) << '\n';
  } else {
    csv_row(*sink, {"n", "lambda_hat", "polya_term", "deficit", "verdict"});
    for (const auto& r : records) {
      csv_row(*sink, {std::to_string(r.estimate.n), fmt(r.estimate.value),
                      fmt(r.polya), fmt(r.deficit),
                      std::string(verdicts::to_string(r.verdict))});
    }
  }
  return kExitOk;
}

int cmd_curves(const Common& c, const CurveArgs& a, bool square,
               std::ostream& out) {
  const auto grid = a.thresholds_only ? std::vector<double>{} : checked_grid(a.grid);
  require(a.tol > 0.0 && a.tol <= 1e-3, "--tol must lie in (0, 1e-3]");

  std::vector<verdicts::ThresholdResult> thresholds;
  std::optional<verdicts::NonexistenceRecord> none;
  if (square) {
    auto sq = verdicts::square_thresholds(a.tol);
    thresholds = sq.crossings;
    none = sq.bk_no_crossing;
  } else {
    thresholds = verdicts::disk_thresholds(a.tol);
  }
  const char* target = square ? "pi_pow_half_alpha" : "two_pow_alpha";
  auto target_of = [square](double x) {
    return square ? std::pow(pi, 0.5 * x) : std::exp2(x);
  };

  Output sink(c.out, out);
  if (a.format == "json") {
    Json curve = Json::array();
    for (double x : grid) {
      const FractionalOrder al(x);
      curve.push_back(Json{{"alpha", x},
                           {"bk", bounds::bk_upper_2d(al)},
                           {"dkk", bounds::dkk_upper_2d(al)},
                           {"dyda", bounds::dyda_upper_2d(al)},
                           {target, target_of(x)}});
    }
    Json ts = Json::array();
    for (const auto& t : thresholds) ts.push_back(verdicts::to_json(t));
    Json doc = envelope(square ? "square" : "disk", c,
                        Json{{"grid", a.thresholds_only ? Json(nullptr)
                                                        : Json(a.grid)},
                             {"tol", a.tol}});
    doc["curve"] = curve;
    doc["thresholds"] = ts;
    if (none) doc["nonexistence"] = verdicts::to_json(*none);
    *sink << doc.dump(2) << '\n';
    return kExitOk;
  }
  if (!a.thresholds_only) {
    csv_row(*sink, {"alpha", "bk", "dkk", "dyda", target});
    for (double x : grid) {
      const FractionalOrder al(x);
      csv_row(*sink, {fmt(x), fmt(bounds::bk_upper_2d(al)),
                      fmt(bounds::dkk_upper_2d(al)),
                      fmt(bounds::dyda_upper_2d(al)), fmt(target_of(x))});
    }
    *sink << '\n';
  }
  threshold_table(*sink, thresholds, none ? &*none : nullptr);
  return kExitOk;
}

std::vector<verdicts::VerdictReport> run_suite(const std::string& suite,
                                               const VerifyArgs& a,
                                               verdicts::SpectrumSource& src) {
  using namespace verdicts;
  const bool all = suite == "all";
  std::vector<VerdictReport> reports;
  const std::vector<double> alphas =
      a.alpha ? std::vector<double>{*a.alpha}
              : std::vector<double>{0.5, 1.0, 1.5};

  if (all || suite == "polya") {
    for (double al : alphas) {
      reports.push_back(polya_suite(src.get(al, a.length, a.basis), a.margin));
    }
  }
  if (all || suite == "liyau") {
    for (double al : alphas) {
      reports.push_back(liyau_check(src.get(al, a.length, a.basis)));
    }
  }
  if (all || suite == "twosided") {
    reports.push_back(two_sided_check_alpha1(src.get(1.0, a.length, a.basis)));
  }
  if (all || suite == "monotone") {
    reports.push_back(monotonicity_check(a.nmax, parse_grid(a.grid), a.length,
                                         a.basis, src));
  }
  if (all || suite == "weyl") {
    WeylOptions w;
    w.n_hi = std::min<long>(w.n_hi, a.basis / 4);
    reports.push_back(
        weyl_ratio_check(src.get(a.alpha.value_or(1.0), a.length, a.basis), w));
  }
  if (all || suite == "kkms") {
    reports.push_back(kkms_consistency_check(src.get(1.0, 2.0, a.basis)));
  }
  if (all || suite == "jensen") {
    JensenOptions j;
    j.vectors = a.vectors;
    j.seed = a.seed;
    reports.push_back(jensen_check(j, src));
  }
  if (all || suite == "disk") reports.push_back(disk_report(a.tol));
  if (all || suite == "square") reports.push_back(square_report(a.tol));
  if (all || suite == "partii") reports.push_back(partii_report());
  return reports;
}

int cmd_verify(const Common& c, const VerifyArgs& a, std::ostream& out) {
  if (a.alpha) checked_alpha(*a.alpha);
  check_length(a.length);
  check_basis(a.basis);
  require(a.margin > 0.0, "--margin must be positive");
  require(a.tol > 0.0 && a.tol <= 1e-3, "--tol must lie in (0, 1e-3]");
  require(a.vectors >= 1, "--vectors must be positive");
  const auto& s = a.suite;
  const bool all = s == "all";
  if (all || s == "monotone") {
    const auto grid = checked_grid(a.grid);
    require(grid.size() >= 3, "monotone suite needs at least three orders");
    require(a.nmax >= 1 && a.nmax <= a.basis, "--nmax must lie in [1, basis]");
  }
  if (all || s == "polya" || s == "weyl") {
    require(a.basis >= 4, "--basis must be at least 4");
  }
  if (s == "weyl" && a.basis < 32) {
    throw UsageError("weyl suite needs --basis >= 32");
  }
  if (s == "twosided") {
    require(!a.alpha || *a.alpha == 1.0, "twosided suite requires alpha = 1");
  }
  if (s == "kkms") {
    require(!a.alpha || *a.alpha == 1.0, "kkms suite requires alpha = 1");
    require(a.length == 2.0, "kkms suite requires length = 2");
  }
  if (all) require(a.basis >= 32, "suite all needs --basis >= 32");
  const auto quad = quadrature_of(c);

  verdicts::SpectrumSource source(quad, assembly_of(c));
  const auto reports = run_suite(s, a, source);
  bool pass = true;
  Json suites = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.overall();
    suites.push_back(verdicts::to_json(r));
  }

  Output sink(c.out, out);
  if (a.format == "text") {
    for (const auto& r : reports) {
      long ok = 0;
      for (const auto& rec : r.records) ok += rec.passed ? 1 : 0;
      *sink << r.suite << ' ' << (r.overall() ? "pass" : "fail") << ' ' << ok
            << '/' << r.records.size() << '\n';
    }
    *sink << "overall " << (pass ? "pass" : "fail") << '\n';
  } else {
    Json params{{"suite", s},
                {"alpha", a.alpha ? Json(*a.alpha) : Json(nullptr)},
                {"length", a.length},
                {"basis", a.basis},
                {"margin", a.margin},
                {"grid", a.grid},
                {"nmax", a.nmax},
                {"vectors", a.vectors},
                {"seed", a.seed},
                {"tol", a.tol}};
    Json doc = envelope("verify", c, std::move(params));
    doc["overall"] = pass ? "pass" : "fail";
    doc["suites"] = suites;
    *sink << doc.dump(2) << '\n';
  }
  return pass ? kExitOk : kExitFailure;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << text;
  if (!os) throw IoError("write to " + path.string() + " failed");
}

int cmd_report(const Common& c, const ReportArgs& a, std::ostream& out) {
  check_basis(a.basis);
  require(a.basis >= 16, "--basis must be at least 16");
  const auto quad = quadrature_of(c);
  const fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  const double length = 2.0;
  const auto disk = verdicts::disk_thresholds(1e-6);
  const auto square = verdicts::square_thresholds(1e-6);
  const auto spectrum = ritz_upper_bounds(a.basis, FractionalOrder(1.0), length,
                                          quad, assembly_of(c));
  const auto deficits = verdicts::polya_check_interval(spectrum);

  std::ostringstream curves;
  csv_row(curves, {"alpha", "bk", "dkk", "dyda", "two_pow_alpha",
                   "pi_pow_half_alpha"});
  for (double x : parse_grid("0.01:2.0:0.01")) {
    const FractionalOrder al(x);
    csv_row(curves, {fmt(x), fmt(bounds::bk_upper_2d(al)),
                     fmt(bounds::dkk_upper_2d(al)),
                     fmt(bounds::dyda_upper_2d(al)), fmt(std::exp2(x)),
                     fmt(std::pow(pi, 0.5 * x))});
  }

  std::ostringstream interval;
  csv_row(interval, {"n", "lambda_hat", "polya_term", "deficit", "verdict",
                     "partial_sum", "sum_lower", "sum_upper"});
  double sum = 0.0;
  Json rows = Json::array();
  for (const auto& r : deficits) {
    sum += r.estimate.value;
    const double n = static_cast<double>(r.estimate.n);
    const double lower = pi * n * n / (2.0 * length);
    const double upper = pi * n * (n + 1.0) / (2.0 * length);
    csv_row(interval, {std::to_string(r.estimate.n), fmt(r.estimate.value),
                       fmt(r.polya), fmt(r.deficit),
                       std::string(verdicts::to_string(r.verdict)), fmt(sum),
                       fmt(lower), fmt(upper)});
    Json row = verdicts::to_json(r);
    row["partial_sum"] = sum;
    row["sum_lower"] = lower;
    row["sum_upper"] = upper;
    rows.push_back(row);
  }
  write_file(dir / "disk_curves.csv", curves.str());
  write_file(dir / "interval_alpha1.csv", interval.str());

  bool two_sided = true;
  bool confirmed = true;
  double running = 0.0;
  for (const auto& r : deficits) {
    running += r.estimate.value;
    const double n = static_cast<double>(r.estimate.n);
    two_sided = two_sided && pi * n * n / (2.0 * length) <= running &&
                running < pi * n * (n + 1.0) / (2.0 * length);
    confirmed = confirmed &&
                r.verdict == verdicts::Verdict::CounterexampleConfirmed;
  }

  if (a.format == "json") {
    Json ts = Json::array();
    for (const auto& t : disk) ts.push_back(verdicts::to_json(t));
    Json sq = Json::array();
    for (const auto& t : square.crossings) sq.push_back(verdicts::to_json(t));
    Json doc = envelope("report", c,
                        Json{{"alpha", 1.0}, {"length", length},
                             {"basis", a.basis}, {"tol", 1e-6}});
    doc["disk_thresholds"] = ts;
    doc["square_thresholds"] = sq;
    doc["square_nonexistence"] = verdicts::to_json(square.bk_no_crossing);
    doc["interval"] = rows;
    doc["two_sided_holds"] = two_sided;
    doc["files"] = Json::array({"disk_curves.csv", "interval_alpha1.csv"});
    write_file(dir / "report.json", doc.dump(2) + "\n");
  } else {
    std::ostringstream md;
    md << "# fracpolya report\n\n"
       << "Tool version " << FRACPOLYA_VERSION << ", basis N = " << a.basis
       << ", abs_tol = " << fmt(c.abs_tol) << ".\n\n"
       << "## Unit disk: crossings with 2^alpha\n\n"
       << "| bound | alpha* |\n|---|---|\n";
    for (const auto& t : disk) {
      md << "| " << t.bound_name << " | " << fmt(t.alpha_star) << " |\n";
    }
    md << "\n## Square: crossings with pi^(alpha/2)\n\n"
       << "| bound | alpha* |\n|---|---|\n";
    for (const auto& t : square.crossings) {
      md << "| " << t.bound_name << " | " << fmt(t.alpha_star) << " |\n";
    }
    md << "| bk_upper_2d | "
       << (square.bk_no_crossing.holds ? "none" : "crossing found")
       << " (min gap " << fmt(square.bk_no_crossing.min_gap) << ") |\n"
       << "\n## Interval (0, 2), alpha = 1\n\n"
       << "| n | lambda_hat | (n pi/2) | deficit |\n|---|---|---|---|\n";
    for (std::size_t i = 0; i < deficits.size() && i < 10; ++i) {
      const auto& r = deficits[i];
      md << "| " << r.estimate.n << " | " << fmt(r.estimate.value) << " | "
         << fmt(r.polya) << " | " << fmt(r.deficit) << " |\n";
    }
    md << "\nAll " << deficits.size() << " trusted eigenvalues below the Weyl term: "
       << (confirmed ? "yes" : "no") << ".\n"
       << "Two-sided sum bound pi n^2/4 <= sum < pi n(n+1)/4 for n <= "
       << deficits.size() << ": " << (two_sided ? "holds" : "violated")
       << ".\n\nData: disk_curves.csv, interval_alpha1.csv.\n";
    write_file(dir / "report.md", md.str());
  }
  out << "wrote " << (dir / (a.format == "json" ? "report.json" : "report.md")).string()
      << '\n';
  return kExitOk;
}

std::vector<fs::path> cache_files(const fs::path& dir) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("stiff_") &&
        entry.path().extension() == ".bin") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

int cmd_cache(const Common& c, bool clear, std::ostream& out) {
  const auto dir = cache_dir_of(c);
  if (!dir) {
    throw UsageError(std::string("no cache directory: pass --cache-dir or set ") +
                     kCacheDirEnv);
  }
  const auto files = cache_files(*dir);
  if (clear) {
    for (const auto& f : files) fs::remove(f);
    out << "removed " << files.size() << " file(s) from " << dir->string()
        << '\n';
    return kExitOk;
  }
  Output sink(c.out, out);
  csv_row(*sink, {"file", "alpha", "length", "size", "abs_tol", "panel_nodes",
                  "bytes"});
  for (const auto& f : files) {
    const auto h = read_stiffness_cache_header(f);
    csv_row(*sink, {f.filename().string(), fmt(h.alpha), fmt(h.length),
                    std::to_string(h.size), fmt(h.abs_tol),
                    std::to_string(h.panel_nodes),
                    std::to_string(fs::file_size(f))});
  }
  return kExitOk;
}

// Appends "--key=value" for every line of the --config file whose key is not
// already given on the command line.
std::vector<std::string> with_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
    }
  }
  if (!path) return args;
  std::ifstream in(*path);
  if (!in) throw UsageError("cannot read config file " + *path);
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  auto given = [&args](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(args.begin() + 1, args.end(), [&](const std::string& a) {
      return a == flag || a.starts_with(flag + "=");
    });
  };
  std::vector<std::string> out = args;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(*path + ":" + std::to_string(number) +
                       ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw UsageError(*path + ":" + std::to_string(number) + ": invalid key");
    }
    if (!given(key)) out.push_back("--" + key + "=" + value);
  }
  return out;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  const auto first = text.find(':');
  const auto second =
      first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos ||
      text.find(':', second + 1) != std::string_view::npos) {
    throw InputError("grid must have the form lo:hi:step");
  }
  auto number = [](std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() ||
        !std::isfinite(v)) {
      throw InputError("invalid number in grid: '" + std::string(s) + "'");
    }
    return v;
  };
  const double lo = number(text.substr(0, first));
  const double hi = number(text.substr(first + 1, second - first - 1));
  const double step = number(text.substr(second + 1));
  constexpr double kSlack = 1e-12;
  if (!(step > 0.0)) throw InputError("grid step must be positive");
  if (lo > hi + kSlack) throw InputError("empty grid: lo > hi");
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    double x = lo + static_cast<double>(i) * step;
    if (x > hi + kSlack) break;
    if (std::abs(x - hi) <= kSlack) x = hi;
    grid.push_back(x);
    if (grid.size() > 1000000) throw InputError("grid has too many points");
  }
  return grid;
}

std::string format_number(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

Json without_timestamps(Json doc) {
  if (doc.is_object()) {
    doc.erase("generated_at");
    for (auto& [key, value] : doc.items()) value = without_timestamps(value);
  } else if (doc.is_array()) {
    for (auto& value : doc) value = without_timestamps(value);
  }
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fractional Laplacian eigenvalue bounds and verification suites",
               "fracpolya"};
  app.set_version_flag("--version", FRACPOLYA_VERSION);
  std::string config_path;
  app.add_option("--config", config_path,
                 "key=value file; command-line flags win");
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--threads", common.threads, "assembly threads (0 = all)");
  app.add_option("--cache-dir", common.cache_dir,
                 std::string("stiffness cache directory (default: $") +
                     kCacheDirEnv + ")");
  app.add_option("--abs-tol", common.abs_tol, "quadrature tolerance per entry");
  app.add_option("--panel-nodes", common.panel_nodes,
                 "Gauss-Legendre nodes per panel");
  app.add_option("--out", common.out, "write output to a file");

  IntervalArgs ia;
  auto* interval = app.add_subcommand(
      "interval", "Ritz upper bounds on (0, L) against the Weyl term");
  interval->add_option("--alpha", ia.alpha, "order in (0, 2]");
  interval->add_option("--length", ia.length, "interval length L");
  interval->add_option("--basis", ia.basis, "number of sine functions N");
  interval->add_option("--nmax", ia.nmax, "rows to emit (default N/4)");
  interval->add_option("--margin", ia.margin, "verdict margin");
  interval->add_option("--format", ia.format)
      ->check(CLI::IsMember({"csv", "json"}));

  CurveArgs disk_args;
  CurveArgs square_args;
  auto curve_options = [](CLI::App* sub, CurveArgs& ca) {
    sub->add_option("--grid", ca.grid, "alpha grid lo:hi:step");
    sub->add_flag("--thresholds-only", ca.thresholds_only);
    sub->add_option("--tol", ca.tol, "bisection tolerance");
    sub->add_option("--format", ca.format)->check(CLI::IsMember({"csv", "json"}));
  };
  auto* disk = app.add_subcommand("disk", "unit disk bounds against 2^alpha");
  curve_options(disk, disk_args);
  auto* square =
      app.add_subcommand("square", "unit square bounds against pi^(alpha/2)");
  curve_options(square, square_args);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", va.suite)
      ->check(CLI::IsMember({"polya", "liyau", "twosided", "monotone", "weyl",
                             "kkms", "jensen", "disk", "square", "partii",
                             "all"}));
  verify->add_option("--alpha", va.alpha, "order in (0, 2]");
  verify->add_option("--length", va.length);
  verify->add_option("--basis", va.basis);
  verify->add_option("--margin", va.margin);
  verify->add_option("--grid", va.grid, "alpha grid for the monotone suite");
  verify->add_option("--nmax", va.nmax, "largest n in the monotone suite");
  verify->add_option("--vectors", va.vectors, "random vectors in the jensen suite");
  verify->add_option("--seed", va.seed);
  verify->add_option("--tol", va.tol, "threshold bisection tolerance");
  verify->add_option("--format", va.format)
      ->check(CLI::IsMember({"json", "text"}));

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "write report and curve data");
  report->add_option("--out-dir", ra.out_dir);
  report->add_option("--basis", ra.basis);
  report->add_option("--format", ra.format)->check(CLI::IsMember({"md", "json"}));

  auto* cache = app.add_subcommand("cache", "inspect or clear the stiffness cache");
  cache->require_subcommand(1);
  auto* inspect = cache->add_subcommand("inspect", "list cached matrices");
  auto* clear = cache->add_subcommand("clear", "delete cached matrices");
  for (auto* sub : {interval, disk, square, verify, report, cache, inspect, clear}) {
    sub->fallthrough();
  }

  std::vector<std::string> full;
  try {
    full = with_config(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << FRACPOLYA_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*interval) return cmd_interval(common, ia, out);
    if (*disk) return cmd_curves(common, disk_args, false, out);
    if (*square) return cmd_curves(common, square_args, true, out);
    if (*verify) return cmd_verify(common, va, out);
    if (*report) return cmd_report(common, ra, out);
    if (*cache) return cmd_cache(common, bool(*clear), out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fracpolya::cli
