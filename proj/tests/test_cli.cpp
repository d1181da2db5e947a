#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fracpolya/cli.hpp"
#include "fracpolya/errors.hpp"

using namespace fracpolya;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fracpolya");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() /
                   ("fracpolya_cli_" + name + "_" + std::to_string(std::random_device{}()));
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("grid parsing") {
  CHECK(cli::parse_grid("0.5:0.5:0.1") == std::vector<double>{0.5});
  const auto g = cli::parse_grid("0.01:2.0:0.01");
  CHECK(g.size() == 200);
  CHECK(g.back() == 2.0);
  CHECK(cli::parse_grid("0.25:2:0.25").size() == 8);
  CHECK_THROWS_AS(cli::parse_grid("1:0.5:0.1"), InputError);
  CHECK_THROWS_AS(cli::parse_grid("0:1:0"), InputError);
  CHECK_THROWS_AS(cli::parse_grid("0:1"), InputError);
  CHECK_THROWS_AS(cli::parse_grid("a:1:0.1"), InputError);
}

TEST_CASE("number and field formatting") {
  CHECK(cli::format_number(2.0) == "2");
  CHECK(cli::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(cli::format_number(-1.5e-13) == "-1.5e-13");
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("interval command") {
  const auto r = run({"interval", "--alpha", "1", "--length", "2", "--basis", "256",
                      "--nmax", "10", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "n,lambda_hat,polya_term,deficit,verdict");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].ends_with(",CounterexampleConfirmed"));
  }
  const auto classical = run({"interval", "--alpha", "2", "--basis", "32", "--nmax", "4"});
  REQUIRE(classical.code == 0);
  for (std::size_t i = 1; i < 5; ++i) CHECK(lines(classical.out)[i].ends_with(",Inconclusive"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"interval", "--alpha", "3"}).code == 2);
  CHECK(run({"interval", "--alpha", "1", "--basis", "64", "--nmax", "17"}).code == 2);
  CHECK(run({"interval", "--length", "-1"}).code == 2);
  CHECK(run({"interval", "--format", "xml"}).code == 2);
  CHECK(run({"square", "--grid", "1:0.5:0.1"}).code == 2);
  CHECK(run({"disk", "--grid", "0:1:0.5"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "kkms", "--length", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("disk and square tables") {
  const auto one = run({"disk", "--grid", "0.5:0.5:0.1"});
  REQUIRE(one.code == 0);
  const auto rows = lines(one.out);
  CHECK(rows[0] == "alpha,bk,dkk,dyda,two_pow_alpha");
  CHECK(rows[1].starts_with("0.5,"));
  CHECK(rows[2].empty());
  CHECK(rows[3] == "bound,target,alpha_star,lo,hi,residual");
  CHECK(rows.size() == 7);

  const auto full = run({"disk", "--grid", "0.01:2.0:0.01"});
  CHECK(lines(full.out).size() == 1 + 200 + 1 + 1 + 3);

  const auto thresholds = run({"disk", "--thresholds-only", "--tol", "1e-6"});
  const auto t = lines(thresholds.out);
  REQUIRE(t.size() == 4);
  CHECK(t[1].starts_with("bk_upper_2d,2^alpha,0.699"));
  CHECK(t[2].starts_with("dkk_upper_2d,2^alpha,0.802"));
  CHECK(t[3].starts_with("dyda_upper_2d,2^alpha,0.984"));

  const auto sq = run({"square", "--grid", "0.1:0.2:0.1"});
  REQUIRE(sq.code == 0);
  const auto s = lines(sq.out);
  CHECK(s[0] == "alpha,bk,dkk,dyda,pi_pow_half_alpha");
  CHECK(s.back().starts_with("bk_upper_2d,pi^(alpha/2),none"));

  const auto js = run({"square", "--thresholds-only", "--format", "json"});
  const auto doc = cli::Json::parse(js.out);
  CHECK(doc["schema_version"] == cli::kSchemaVersion);
  CHECK(doc["thresholds"].size() == 2);
  CHECK(doc["nonexistence"]["holds"] == true);
}

TEST_CASE("verify writes a JSON report and reflects the outcome") {
  const auto r = run({"verify", "--suite", "jensen"});
  REQUIRE(r.code == 0);
  const auto doc = cli::Json::parse(r.out);
  CHECK(doc["overall"] == "pass");
  CHECK(doc["command"] == "verify");
  CHECK(doc.contains("generated_at"));
  CHECK(doc["cache"]["env"] == "FRACPOLYA_CACHE_DIR");
  CHECK(doc["parameters"]["seed"] == 20170101);
  CHECK(doc["suites"][0]["parameters"]["vectors"] == 100);
  CHECK(doc["suites"][0]["records"][0]["provenance"] == "paper");

  const auto weyl = run({"verify", "--suite", "weyl", "--alpha", "1", "--basis", "512",
                         "--format", "text"});
  CHECK(weyl.code == 0);
  CHECK(weyl.out.find("weyl pass") != std::string::npos);
}

TEST_CASE("verify all is deterministic apart from the timestamp") {
  const auto a = run({"verify", "--suite", "all", "--basis", "256"});
  const auto b = run({"verify", "--suite", "all", "--basis", "256"});
  REQUIRE(a.code == 0);
  const auto ja = cli::Json::parse(a.out);
  CHECK(ja["suites"].size() >= 7);
  CHECK(cli::without_timestamps(ja).dump() ==
        cli::without_timestamps(cli::Json::parse(b.out)).dump());
}

TEST_CASE("report and cache commands") {
  const auto dir = scratch_dir("report");
  const auto cache = dir / "cache";
  const auto first = run({"report", "--out-dir", (dir / "a").string(), "--basis", "64",
                          "--cache-dir", cache.string()});
  REQUIRE(first.code == 0);
  for (const char* f : {"report.md", "disk_curves.csv", "interval_alpha1.csv"}) {
    CHECK(fs::exists(dir / "a" / f));
  }
  const auto listing = run({"cache", "inspect", "--cache-dir", cache.string()});
  CHECK(lines(listing.out).size() == 2);
  const auto second = run({"report", "--out-dir", (dir / "b").string(), "--basis", "64",
                           "--cache-dir", cache.string()});
  REQUIRE(second.code == 0);
  for (const char* f : {"report.md", "disk_curves.csv", "interval_alpha1.csv"}) {
    CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));
  }
  const auto js = run({"report", "--out-dir", (dir / "c").string(), "--basis", "64",
                       "--format", "json"});
  REQUIRE(js.code == 0);
  const auto doc = cli::Json::parse(slurp(dir / "c" / "report.json"));
  CHECK(doc["schema_version"] == cli::kSchemaVersion);
  CHECK(doc["disk_thresholds"].size() == 3);
  CHECK(doc["interval"].size() == 16);

  const auto cleared = run({"cache", "clear", "--cache-dir", cache.string()});
  CHECK(cleared.code == 0);
  CHECK(lines(run({"cache", "inspect", "--cache-dir", cache.string()}).out).size() == 1);
  fs::remove_all(dir);
}

TEST_CASE("config file values yield to flags") {
  const auto dir = scratch_dir("config");
  fs::create_directories(dir);
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# batch settings\nalpha = 0.5\nbasis=32\nnmax=2\n";
  const auto from_file = run({"interval", "--config", cfg.string()});
  REQUIRE(from_file.code == 0);
  CHECK(lines(from_file.out).size() == 3);
  const auto flagged = run({"interval", "--config", cfg.string(), "--nmax", "1"});
  CHECK(lines(flagged.out).size() == 2);
  CHECK(from_file.out.substr(0, 60) == flagged.out.substr(0, 60));
  std::ofstream(cfg) << "broken line\n";
  CHECK(run({"interval", "--config", cfg.string()}).code == 2);
  fs::remove_all(dir);
}
