// Copyright 2026 The nhqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nhqc/cli.hpp"
#include "nhqc/gates.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

using json = nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = nhqc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, int expected_code = 0) {
  const CliResult r = run_cli(args);
  REQUIRE(r.code == expected_code);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("gate: exact rotation reports unit fidelities") {
  const json report = run_json({"gate", "rz:theta=pi/2:mode=exact"});
  CHECK(report["command"] == "gate");
  CHECK(report["pass"] == true);
  CHECK(report["config"]["gate"] == "rz:theta=pi/2:mode=exact");
  for (const auto& row : report["results"]["state_table"]) {
    CHECK(std::abs(row["state_fidelity_attenuated"].get<double>() - 1.0) <
          1e-9);
    CHECK(std::abs(row["state_fidelity_unattenuated"].get<double>() - 1.0) <
          1e-9);
  }
  CHECK(std::abs(report["results"]["chi_fidelity"]["unattenuated"].get<double>() -
                 1.0) < 1e-9);
  CHECK(report["results"]["leakage_magnitude"].get<double>() < 1e-9);
}

TEST_CASE("gate: the two-qubit input table has the full fifteen rows") {
  const json report =
      run_json({"gate", "cnot:mode=trotter:n=2", "--inputs=paper"});
  CHECK(report["results"]["state_table"].size() == 15);
  CHECK(report["results"]["state_table"][0]["input"] == "IX");
  CHECK(report["results"]["state_table"][14]["input"] == "ZZ");
  // chi over the two-qubit basis is 16x16 with [re, im] entries.
  CHECK(report["results"]["chi"]["basis"].size() == 16);
  CHECK(report["results"]["chi"]["entries"].size() == 16);
  CHECK(report["results"]["chi"]["entries"][0][0].size() == 2);
}

TEST_CASE("gate: attenuation scales the attenuated column only") {
  const json plain = run_json({"gate", "rx:phi=pi:mode=trotter:n=2"});
  const json dimmed =
      run_json({"gate", "rx:phi=pi:mode=trotter:n=2", "--lambda=0.8"});
  for (std::size_t i = 0; i < 3; ++i) {
    const double att1 =
        plain["results"]["state_table"][i]["state_fidelity_attenuated"];
    const double attl =
        dimmed["results"]["state_table"][i]["state_fidelity_attenuated"];
    const double un1 =
        plain["results"]["state_table"][i]["state_fidelity_unattenuated"];
    const double unl =
        dimmed["results"]["state_table"][i]["state_fidelity_unattenuated"];
    CHECK(std::abs(attl - 0.8 * att1) < 1e-9);
    CHECK(std::abs(unl - un1) < 1e-9);
    // The loss-model approximation quoted alongside the table.
    CHECK(std::abs(attl - 0.8 * unl) < 0.05);
  }
  const double chi_att1 = plain["results"]["chi_fidelity"]["attenuated"];
  const double chi_attl = dimmed["results"]["chi_fidelity"]["attenuated"];
  CHECK(std::abs(chi_attl - 0.8 * chi_att1) < 1e-9);
  CHECK(std::abs(dimmed["results"]["chi_fidelity"]["unattenuated"].get<double>() -
                 plain["results"]["chi_fidelity"]["unattenuated"].get<double>()) <
        1e-9);
}

TEST_CASE("gate: config text round-trips through its canonical form") {
  const json report = run_json({"gate", "rz:theta=-pi/4:n=5"});
  const std::string canonical = report["config"]["gate"];
  CHECK(canonical == "rz:theta=-pi/4:mode=trotter:n=5");
  CHECK(nhqc::GateSpec::parse(canonical).canonical_text() == canonical);
}

TEST_CASE("holonomy: the declared Hamiltonians pass on the encoded subspaces") {
  const json h1 = run_json({"holonomy", "h1", "--phi=0.3"});
  CHECK(h1["pass"] == true);
  CHECK(h1["results"]["condition_i"]["residual"].get<double>() < 1e-9);
  CHECK(h1["results"]["condition_ii"]["max_residual"].get<double>() < 1e-9);

  const json h3 = run_json({"holonomy", "h3"});
  CHECK(h3["pass"] == true);
  CHECK(h3["config"]["subspace"].size() == 4);
}

TEST_CASE("holonomy: complement block also returns; a half space does not") {
  // Both conditions hold on {|00>, |01>}: every generator term flips the
  // ancilla, and the evolution acts as diag(1, -1) on that block at the
  // period.
  const json complement = run_json({"holonomy", "h1", "--subspace=00,01"});
  CHECK(complement["pass"] == true);
  CHECK(complement["results"]["condition_ii"]["max_residual"].get<double>() <
        1e-9);

  // {|10>} alone is swapped to |11> at the period, so condition (i) fails.
  const CliResult half = run_cli({"holonomy", "h1", "--subspace=10"});
  CHECK(half.code == 1);
  const json parsed = json::parse(half.out);
  CHECK(parsed["results"]["condition_i"]["pass"] == false);
  CHECK(parsed["results"]["condition_ii"]["pass"] == true);
}

TEST_CASE("holonomy: unknown Hamiltonian is a usage error") {
  const CliResult r = run_cli({"holonomy", "h9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("h9") != std::string::npos);
}

TEST_CASE("sweep: controlled-gate fidelity is nondecreasing in the step count") {
  const CliResult r = run_cli({"sweep", "cnot", "--n=1,2,4,8,16"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "N,frobenius_error,chi_fidelity_unattenuated");

  const double expected_fid[] = {0.768464249965, 0.987010868336,
                                 0.999238887453, 0.999953269257,
                                 0.999997092562};
  const double expected_err[] = {1.141774010762, 0.258617857559,
                                 0.062339319467, 0.015435914373,
                                 0.003849624500};
  double prev = 0.0;
  for (int i = 0; i < 5; ++i) {
    std::string line;
    REQUIRE(std::getline(lines, line));
    std::stringstream row(line);
    std::string n_text, err_text, fid_text;
    std::getline(row, n_text, ',');
    std::getline(row, err_text, ',');
    std::getline(row, fid_text, ',');
    const double err = std::stod(err_text);
    const double fid = std::stod(fid_text);
    CHECK(err == doctest::Approx(expected_err[i]).epsilon(1e-6));
    CHECK(fid == doctest::Approx(expected_fid[i]).epsilon(1e-6));
    CHECK(fid >= prev);
    prev = fid;
  }
  CHECK(r.out.find("# chi_fidelity_monotone=true") != std::string::npos);
}

TEST_CASE("sweep: includes the operating point and scales second order") {
  const json single = run_json(
      {"sweep", "rz", "--theta=pi/2", "--n=3", "--format=json"});
  const double at_op =
      single["results"]["rows"][0]["chi_fidelity_unattenuated"];
  CHECK(at_op == doctest::Approx(0.991796237954).epsilon(1e-6));

  const json scan = run_json(
      {"sweep", "rz", "--theta=pi/2", "--n=8,16,32,64", "--format=json"});
  double lo = 1e300;
  double hi = 0.0;
  for (const auto& row : scan["results"]["rows"]) {
    const double n = row["n"].get<double>();
    const double scaled = row["frobenius_error"].get<double>() * n * n;
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(hi / lo < 2.0);
}

TEST_CASE("sweep: usage errors") {
  CHECK(run_cli({"sweep", "cnot", "--n="}).code == 2);
  CHECK(run_cli({"sweep", "cnot", "--theta=pi"}).code == 2);
  CHECK(run_cli({"sweep", "hadamard"}).code == 2);
  CHECK(run_cli({"sweep", "cnot", "--n=0,4"}).code == 2);
}

TEST_CASE("qpt: oracle cross-check over seeded random unitaries") {
  const json report = run_json(
      {"qpt", "rz:theta=pi/2:mode=exact", "--random=5", "--seed=7"});
  CHECK(report["pass"] == true);
  CHECK(report["results"]["random_oracle_check"]["count"] == 5);
  CHECK(report["results"]["random_oracle_check"]["max_deviation"].get<double>() <
        1e-9);
  // chi of the exact rotation: corner entries 1/2.
  const auto& entries = report["results"]["chi"]["entries"];
  CHECK(std::abs(entries[0][0][0].get<double>() - 0.5) < 1e-9);
  CHECK(std::abs(entries[3][3][0].get<double>() - 0.5) < 1e-9);
}

TEST_CASE("report: all five rows pass in at least one leakage mode") {
  const json report = run_json({"report"});
  CHECK(report["pass"] == true);
  CHECK(report["results"]["all_pass"] == true);
  REQUIRE(report["results"]["rows"].size() == 5);

  const double targets[] = {0.992, 0.986, 0.992, 0.974, 0.987};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& row = report["results"]["rows"][i];
    CHECK(row["pass"] == true);
    CHECK(row["target"].get<double>() == doctest::Approx(targets[i]));
    CHECK(row["passing_modes"].size() >= 1);
    const double trace = row["chi_fidelity_unattenuated"]["trace"];
    const double project = row["chi_fidelity_unattenuated"]["project"];
    CHECK(std::abs(trace - targets[i]) <= 0.003);
    CHECK(std::abs(project - targets[i]) <= 0.003);
  }
}

TEST_CASE("report: byte-identical across runs; csv variant") {
  const CliResult a = run_cli({"report"});
  const CliResult b = run_cli({"report"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const CliResult csv = run_cli({"report", "--format=csv"});
  CHECK(csv.code == 0);
  std::size_t pass_count = 0;
  std::istringstream lines(csv.out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find(",PASS,") != std::string::npos) ++pass_count;
  }
  CHECK(pass_count == 5);
}

TEST_CASE("report: --out writes the same bytes as stdout") {
  const auto path = std::filesystem::temp_directory_path() / "nhqc_report_test.json";
  std::filesystem::remove(path);
  const CliResult direct = run_cli({"report"});
  const CliResult filed = run_cli({"report", "--out=" + path.string()});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"gate"}).code == 2);
  CHECK(run_cli({"gate", "rq:theta=pi"}).code == 2);
  CHECK(run_cli({"gate", "rz:theta=pie"}).code == 2);
  CHECK(run_cli({"gate", "rz:theta=pi", "--leakage=maybe"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
}

#ifdef __unix__
TEST_CASE("installed binary: exit codes and report bytes") {
  const std::string binary = NHQC_CLI_BINARY;
  const auto path =
      std::filesystem::temp_directory_path() / "nhqc_binary_report.json";
  std::filesystem::remove(path);

  const int ok = std::system(
      (binary + " report --out=" + path.string() + " >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(ok));
  CHECK(WEXITSTATUS(ok) == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  const json parsed = json::parse(content.str());
  CHECK(parsed["pass"] == true);
  std::filesystem::remove(path);

  const int bad = std::system((binary + " gate rq:x >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(bad));
  CHECK(WEXITSTATUS(bad) == 2);

  const int fail = std::system(
      (binary + " holonomy h1 --subspace=10 >/dev/null 2>&1").c_str());
  REQUIRE(WIFEXITED(fail));
  CHECK(WEXITSTATUS(fail) == 1);
}
#endif
