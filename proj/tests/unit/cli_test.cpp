// Copyright 2026 The ipgq Authors.
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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "ipgq/bench/export.hpp"
#include "test_support.hpp"

namespace {

namespace fs = std::filesystem;

int run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + IPGQ_CLI_PATH + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ipgq_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, HelpAndVersionSucceed) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run("--version"), 0);
}

TEST_F(CliTest, ConfigErrorsExitWithOne) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("bench --experiment bell"), 1);
  EXPECT_EQ(run("bench --config /nonexistent.json"), 1);
  EXPECT_EQ(run("prepare-state --runs 0 --out " + dir_.string()), 1);
  EXPECT_EQ(run("compile-unitary --entangler star --out " + dir_.string()), 1);
  EXPECT_EQ(run("prepare-state --optimizer newton --out " + dir_.string()), 1);
}

TEST_F(CliTest, EnvironmentSetsDefaultOutputDirectory) {
  ASSERT_EQ(run("prepare-state --target w --iters 4 --runs 1", "IPGQ_OUT_DIR=" + dir_.string()), 0);
  for (const char* f : {"record.json", "ipg_best.csv", "adam_average.csv", "cost.svg", "lbfgs_best.qasm"}) {
    EXPECT_TRUE(fs::exists(dir_ / f)) << f;
  }
}

TEST_F(CliTest, ConfigFileAndOverrides) {
  fs::create_directories(dir_);
  ipgq::bench::write_text_file(dir_ / "cfg.json", R"({"experiment": "qft-frobenius", "iterations": 3, "runs": 1,
                                                     "histogram_samples": 10})");
  ASSERT_EQ(run("bench --config " + (dir_ / "cfg.json").string() + " --optimizer ipg --iters 2 --out " +
                (dir_ / "out").string()),
            0);
  const auto record = ipgq::bench::record_from_json(ipgq::bench::read_text_file(dir_ / "out" / "record.json"));
  EXPECT_EQ(record.config.iterations, 2);
  ASSERT_EQ(record.results.size(), 1u);
  EXPECT_EQ(record.results[0].algorithm, "ipg");
  EXPECT_EQ(record.results[0].histogram->fidelity.size(), 10u);
}

TEST_F(CliTest, ExportQasmFromRecord) {
  ASSERT_EQ(run("compile-unitary --iters 3 --runs 1 --histogram-samples 5 --out " + dir_.string()), 0);
  const fs::path qasm = dir_ / "exported.qasm";
  ASSERT_EQ(run("export-qasm --record " + (dir_ / "record.json").string() + " --optimizer adam --out " + qasm.string()), 0);
  const auto parsed = ipgq::testing::parse_qasm(ipgq::bench::read_text_file(qasm));
  EXPECT_EQ(parsed.num_qubits, 3);
  EXPECT_EQ(parsed.gates.size(), 45u + 15u);
  EXPECT_EQ(run("export-qasm --record " + (dir_ / "record.json").string() + " --optimizer gd"), 1);
}

}  // namespace
