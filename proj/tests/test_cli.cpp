#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

using nlohmann::json;

std::string cli_bin() {
  const char* env = std::getenv("BIA_CLI_BIN");
  return env ? env : "";
}

struct RunResult {
  int exit_code = -1;
  std::string out_file;
};

int run_cli(const std::string& args) {
  const std::string cmd = cli_bin() + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return json::parse(in);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/bia_test_") + std::to_string(::getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("cli construct writes a bundle matching the library" * doctest::skip(cli_bin().empty())) {
  const auto path = tmp_path("bundle.json");
  CHECK(run_cli("construct --users 5 --out " + path) == 0);
  const auto doc = read_json(path);
  CHECK(doc["schema"] == 1);
  CHECK(doc["payload"]["params"]["slots"] == 14);
  CHECK(doc["payload"]["params"]["order"] == 2);
  CHECK(doc["payload"]["basis"]["s"].size() == 14);
  std::remove(path.c_str());
}

TEST_CASE("cli exit codes" * doctest::skip(cli_bin().empty())) {
  CHECK(run_cli("construct --users 1 --out " + tmp_path("triv.json")) == 0);
  // infeasible tight layout -> usage/infeasible exit
  CHECK(run_cli("construct --users 7 --order 3 --out /dev/null") == 2);
  CHECK(run_cli("construct --users 4 --order 3 --out /dev/null") == 2);
  CHECK(run_cli("construct --users 4 --order 3 --mode padded --out /dev/null") == 0);
  // verify of a polluted tight construction -> violation exit
  CHECK(run_cli("verify --users 5 --seeds 2 --out /dev/null") == 1);
  // verify of clean constructions -> success
  CHECK(run_cli("verify --users 1 --out /dev/null") == 0);
  CHECK(run_cli("verify --users 5 --mode padded --seeds 2 --out /dev/null") == 0);
  CHECK(run_cli("verify --users 2 --order 1 --float --out /dev/null") == 0);
  // bad flags -> usage
  CHECK(run_cli("verify") == 2);
  CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("cli dof table row content" * doctest::skip(cli_bin().empty())) {
  const auto path = tmp_path("dof.csv");
  CHECK(run_cli("dof --k 1..10 --out " + path) == 0);
  const auto csv = read_file(path);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "K,r_star,d_star_num,d_star_den,d_star_float,ratio_to_half_sqrtK");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 10);
  CHECK(rows[4].substr(0, 9) == "5,2,10,7,");  // K=5 row shows 10/7
  CHECK(rows[6].substr(0, 10) == "7,3,21,13,");
  CHECK(rows[0].substr(0, 6) == "1,1,1,");
  std::remove(path.c_str());
}

TEST_CASE("cli simulate gate and clean-path summary" * doctest::skip(cli_bin().empty())) {
  // Gate: tight 3-user fails verification, simulate refuses.
  CHECK(run_cli("simulate --users 3 --snr-db 40,60,80 --trials 1 --summary-out /dev/null") == 1);

  const auto csv_path = tmp_path("curve.csv");
  const auto sum_path = tmp_path("summary.json");
  CHECK(run_cli("simulate --users 2 --order 1 --snr-db 40,60,80 --trials 2 --out " + csv_path +
                " --summary-out " + sum_path) == 0);
  const auto summary = read_json(sum_path);
  CHECK(summary["payload"]["slope_dof"].get<double>() == doctest::Approx(1.0).epsilon(0.03));
  const auto csv = read_file(csv_path);
  CHECK(csv.substr(0, 26) == "snr_db,user,rate,sum_rate\n");
  std::remove(csv_path.c_str());
  std::remove(sum_path.c_str());
}

TEST_CASE("cli reproducibility: identical flags produce identical digests" *
          doctest::skip(cli_bin().empty())) {
  const auto p1 = tmp_path("rep1.json");
  const auto p2 = tmp_path("rep2.json");
  SUBCASE("construct digests") {
    CHECK(run_cli("construct --users 4 --out " + p1) == 0);
    CHECK(run_cli("construct --users 4 --out " + p2) == 0);
    const auto d1 = read_json(p1)["manifest"]["outputs"]["payload"];
    const auto d2 = read_json(p2)["manifest"]["outputs"]["payload"];
    CHECK(d1 == d2);
  }
  SUBCASE("verify digests") {
    CHECK(run_cli("verify --users 4 --mode padded --seeds 3 --seed 9 --out " + p1) == 0);
    CHECK(run_cli("verify --users 4 --mode padded --seeds 3 --seed 9 --out " + p2) == 0);
    CHECK(read_json(p1)["manifest"]["outputs"]["payload"] ==
          read_json(p2)["manifest"]["outputs"]["payload"]);
  }
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("cli verify accepts a serialized bundle" * doctest::skip(cli_bin().empty())) {
  const auto bundle_path = tmp_path("bundle2.json");
  const auto report_path = tmp_path("report.json");
  CHECK(run_cli("construct --users 3 --mode padded --out " + bundle_path) == 0);
  CHECK(run_cli("verify --bundle " + bundle_path + " --seeds 2 --out " + report_path) == 0);
  const auto report = read_json(report_path);
  CHECK(report["payload"]["summary"]["all_pass"] == true);
  CHECK(report["payload"]["params"]["mode"] == "padded");
  std::remove(bundle_path.c_str());
  std::remove(report_path.c_str());
}
