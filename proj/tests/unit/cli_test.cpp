// Copyright 2026 The numix Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "numix/errors.hpp"
#include "numix/oscillation.hpp"
#include "numix/qasm.hpp"

namespace numix {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(NUMIX_DATA_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("numix_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(ParseGrid, ListsAndRanges) {
  EXPECT_EQ(cli::parse_grid("0.5,1,2"), (std::vector<double>{0.5, 1, 2}));
  EXPECT_EQ(cli::parse_grid("1:2:3"), (std::vector<double>{1, 1.5, 2}));
  EXPECT_EQ(cli::parse_grid("2:2:1"), (std::vector<double>{2}));
  EXPECT_THROW(cli::parse_grid("1:2"), InvalidConfigError);
  EXPECT_THROW(cli::parse_grid("1:2:0"), InvalidConfigError);
  EXPECT_THROW(cli::parse_list("1,,2"), InvalidConfigError);
  EXPECT_THROW(cli::parse_list("abc"), InvalidConfigError);
}

TEST_F(CliTest, VerifyValidSpec) {
  const Result r = run({"verify", data("pmns3_pdg2020.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("<= 1e-10: OK"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyDegreesAndSterile) {
  EXPECT_EQ(run({"verify", "--degrees", data("pmns3_pdg2020_degrees.json")}).code, 0);
  EXPECT_EQ(run({"verify", data("pmns4_sterile.json")}).code, 0);
}

TEST_F(CliTest, VerifyStructuralErrorsExitTwo) {
  Result r = run({"verify", data("invalid_equal_indices.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"verify", data("invalid_index_out_of_range.json")}).code, 2);
  std::ofstream(path("bad.json")) << "{ nope";
  EXPECT_EQ(run({"verify", path("bad.json")}).code, 2);
  EXPECT_EQ(run({"verify", path("missing.json")}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"sweep", data("pmns3_pdg2020.json")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, SweepModesAgree) {
  const std::vector<std::string> common{
      "sweep", data("pmns3_pdg2020.json"), "--masses", "0,7.42e-5,2.517e-3",
      "--baseline-km", "1300", "--energies", "0.5:5:10", "--initial", "mu"};
  auto analytic = common;
  analytic.insert(analytic.end(), {"--out", path("a.csv")});
  auto circuit = common;
  circuit.insert(circuit.end(), {"--mode", "exact-circuit", "--out", path("c.csv")});
  ASSERT_EQ(run(analytic).code, 0);
  ASSERT_EQ(run(circuit).code, 0);
  std::istringstream a(slurp(path("a.csv"))), c(slurp(path("c.csv")));
  std::string la, lc;
  std::getline(a, la);
  std::getline(c, lc);
  EXPECT_EQ(la, "x,channel,probability,mode");
  int rows = 0;
  while (std::getline(a, la) && std::getline(c, lc)) {
    const auto pa = std::stod(la.substr(la.find(',', la.find(',') + 1) + 1));
    const auto pc = std::stod(lc.substr(lc.find(',', lc.find(',') + 1) + 1));
    EXPECT_NEAR(pa, pc, 1e-9);
    ++rows;
  }
  EXPECT_EQ(rows, 30);
}

TEST_F(CliTest, SweepDeltaCpCurves) {
  const Result r = run({"sweep", data("pmns3_pdg2020.json"), "--masses",
                        "0,7.42e-5,2.517e-3", "--baseline-km", "1300",
                        "--energies", "1,2,3", "--initial", "2", "--degrees",
                        "--delta-cp=90,0,-90"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x,channel,probability,mode,delta_cp");
  EXPECT_NE(r.out.find("mu->e,"), std::string::npos);
  EXPECT_NE(r.out.find(",-90\n"), std::string::npos);
}

TEST_F(CliTest, SweepShotsDeterministicWithCalibration) {
  const std::vector<std::string> args{
      "sweep", data("pmns3_pdg2020.json"), "--masses", "0,7.42e-5,2.517e-3",
      "--baseline-km", "1300", "--energies", "1,2", "--mode", "shots",
      "--shots", "8192", "--noise", "0.125,0.196", "--seed", "7",
      "--initial", "mu", "--calibration-out", path("cal.json")};
  const Result a = run(args);
  const Result b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')),
            "x,channel,probability,mode,raw_probability,corrected_probability");
  const auto cal = nlohmann::json::parse(slurp(path("cal.json")));
  EXPECT_EQ(cal["shots"], 8192);
  EXPECT_EQ(cal["seed"], 7);
  EXPECT_EQ(cal["flip_rates"].size(), 2u);
}

TEST_F(CliTest, SweepNoiseNeedsShotsMode) {
  EXPECT_EQ(run({"sweep", data("pmns3_pdg2020.json"), "--masses", "0,1e-4,2e-3",
                 "--baseline-km", "100", "--energies", "1", "--noise", "0.1,0.1"})
                .code,
            2);
  EXPECT_EQ(run({"sweep", data("pmns3_pdg2020.json"), "--masses", "0,1e-4",
                 "--baseline-km", "100", "--energies", "1"})
                .code,
            2);
}

TEST_F(CliTest, ExportPmns3RoundTrips) {
  const Result r = run({"export", data("pmns3_pdg2020.json"), "--qasm-out",
                        path("p3.qasm")});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("round-trip: ok"), std::string::npos);
  EXPECT_NE(r.out.find("gates: "), std::string::npos);
  const ParsedQasm p = parse_qasm(slurp(path("p3.qasm")));
  EXPECT_EQ(p.circuit.n_qubits(), 2u);
}

TEST_F(CliTest, ExportEmptySpecIsHeaderOnly) {
  ASSERT_EQ(run({"export", data("empty2.json"), "--qasm-out", path("e.qasm")}).code, 0);
  EXPECT_EQ(slurp(path("e.qasm")),
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\ncreg c[1];\n");
}

TEST_F(CliTest, ExportFourFlavorWithEvolution) {
  const Result r = run({"export", data("pmns4_sterile.json"), "--with-evolution",
                        "--phases", "0,0.3,1.7,-2.2", "--measure", "--qasm-out",
                        path("p4.qasm")});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const ParsedQasm p = parse_qasm(slurp(path("p4.qasm")));
  EXPECT_TRUE(p.measured);
  const MixingSpec spec = mixing_spec_from_json(slurp(data("pmns4_sterile.json")));
  const Circuit reference = evolution_circuit(spec, PhaseOperator{{0, 0.3, 1.7, -2.2}});
  EXPECT_LT(max_abs_diff(unitary_of(p.circuit), unitary_of(reference)), 1e-10);
}

TEST_F(CliTest, ExportPhasesWithoutEvolutionIsUsageError) {
  EXPECT_EQ(run({"export", data("pmns3_pdg2020.json"), "--phases", "0,1,2"}).code, 2);
}

}  // namespace
}  // namespace numix
