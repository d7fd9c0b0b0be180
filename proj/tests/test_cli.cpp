#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "latcover/catalog.hpp"

using namespace latcover;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "latcover");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string strip_timestamp(const std::string& s) {
  return std::regex_replace(s, std::regex("\"timestamp\": \"[^\"]*\""), "\"timestamp\": \"\"");
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto p = std::filesystem::temp_directory_path() / ("latcover_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(run_cli({"--bogus", "verify-modular"}).code == cli::kExitUsage);
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"verify-modular", "--modulus", "7"}).code == cli::kExitUsage);
  CHECK(run_cli({"enumerate", "--slots", "5"}).code == cli::kExitUsage);
  CHECK(run_cli({"--format", "xml", "verify-groebner"}).code == cli::kExitUsage);
  CHECK(run_cli({"--threads", "0", "verify-groebner"}).code == cli::kExitUsage);
  CHECK(run_cli({"form", "check"}).code == cli::kExitUsage);
  const Result help = run_cli({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("verify-all") != std::string::npos);
}

TEST_CASE("verify-modular") {
  const Result r = run_cli({"verify-modular", "--modulus", "5"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("0 exceptional") != std::string::npos);
  CHECK(r.out.find("ALL CHECKS PASSED") != std::string::npos);

  const Result all = run_cli({"--format", "json", "verify-modular"});
  CHECK(all.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(all.out);
  CHECK(j["command"] == "verify-modular");
  CHECK(j["passed"] == true);
  CHECK(j["reports"].size() == 8);
}

TEST_CASE("enumerate --raw-count") {
  const Result r = run_cli({"enumerate", "--raw-count"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("raw solutions: 6131") != std::string::npos);
  CHECK(r.out.find("minimal coverings: 54 (length 3: 1, length 4: 4, length 5: 9, length 6: 40)") !=
        std::string::npos);
  CHECK(r.out.find("len=3 | 1,0;0,2 | 2,0;0,1 | 2,0;1,1") != std::string::npos);
}

TEST_CASE("json output is reproducible apart from the timestamp") {
  const Result a = run_cli({"--format", "json", "--threads", "1", "enumerate", "--raw-count"});
  const Result b = run_cli({"--format", "json", "--threads", "1", "enumerate", "--raw-count"});
  CHECK(a.code == 0);
  CHECK(strip_timestamp(a.out) == strip_timestamp(b.out));
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["raw_count"] == 6131);
  CHECK(j["minimal_count"] == 54);
  CHECK(j["catalog"].size() == 54);
  // Thread count changes only the threads field.
  const Result c = run_cli({"--format", "json", "--threads", "4", "enumerate", "--raw-count"});
  auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["threads"] == 4);
  jc["threads"] = 1;
  jc["timestamp"] = j["timestamp"];
  CHECK(jc == j);
}

TEST_CASE("LATTICE_COVER_THREADS overrides --threads") {
  ::setenv("LATTICE_COVER_THREADS", "3", 1);
  const Result r = run_cli({"--format", "json", "--threads", "1", "verify-modular", "--modulus", "5"});
  CHECK(nlohmann::json::parse(r.out)["threads"] == 3);
  ::setenv("LATTICE_COVER_THREADS", "many", 1);
  CHECK(run_cli({"verify-modular", "--modulus", "5"}).code == cli::kExitError);
  ::unsetenv("LATTICE_COVER_THREADS");
  const Result d = run_cli({"--format", "json", "--threads", "2", "verify-modular", "--modulus", "5"});
  CHECK(nlohmann::json::parse(d.out)["threads"] == 2);
}

TEST_CASE("verify-catalog with a file") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "latcover_test_catalog.txt";
  REQUIRE(run_cli({"enumerate", "--out", path.string()}).code == 0);
  CHECK(run_cli({"verify-catalog", "--in", path.string()}).code == cli::kExitOk);

  // Drop the last line, the all-index-5 covering sorts last.
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  Catalog cat = parse_catalog(ss.str());
  std::erase(cat.entries, covering_5_6());
  const auto mutated = temp_file("mutated.txt", serialize(cat));
  const Result m = run_cli({"verify-catalog", "--in", mutated.string()});
  CHECK(m.code == cli::kExitFailed);
  CHECK(m.out.find("[FAIL] length6.count") != std::string::npos);

  const auto bad = temp_file("bad.txt", "len=3 | 1,0;0,2\n");
  const Result b = run_cli({"verify-catalog", "--in", bad.string()});
  CHECK(b.code == cli::kExitError);
  CHECK(b.err.find("line 1") != std::string::npos);
  CHECK(run_cli({"verify-catalog", "--in", (dir / "latcover_no_such_file").string()}).code == cli::kExitError);
}

TEST_CASE("verify-groebner") {
  const Result r = run_cli({"verify-groebner"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("pair(R,R2)") != std::string::npos);
}

TEST_CASE("form subcommands") {
  const Result f0 = run_cli({"form", "check", "--coeffs", "0,1,1,0"});
  CHECK(f0.code == 0);
  CHECK(f0.out.find("verdict: extraordinary") != std::string::npos);
  const Result f3 = run_cli({"form", "check", "--coeffs", "0,1,3,0", "--conj", "1/3,0;0,1"});
  CHECK(f3.code == 0);
  CHECK(f3.out.find("verdict: not extraordinary") != std::string::npos);
  const Result sx = run_cli({"--format", "json", "form", "check", "--coeffs", "1,-3,0,5,0,-3,1", "--conj", "1,0;0,-1",
                             "--variant", "d6"});
  CHECK(sx.code == 0);
  CHECK(nlohmann::json::parse(sx.out)["extraordinary"] == true);
  CHECK(run_cli({"form", "check", "--coeffs", "1,-3,0,5,0,-3,1", "--variant", "d6"}).code == cli::kExitError);
  CHECK(run_cli({"form", "check", "--coeffs", "1,2"}).code == cli::kExitError);

  CHECK(run_cli({"form", "compare", "--f", "0,1,1,0", "--g", "0,4,2,0", "--n", "6"}).code == 0);
  CHECK(run_cli({"form", "compare", "--f", "0,1,1,0", "--g", "0,1,1,0", "--n", "4", "--m", "4"}).code == 0);
}
