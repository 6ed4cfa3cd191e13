// Copyright 2026 The asbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "asbell/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

using asbell::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    const Outcome o = run_cli(args);
    EXPECT_EQ(o.code, 0) << o.err;
    return json::parse(o.out);
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, MatrixCsv) {
    const Outcome o = run_cli({"matrix", "4", "--format", "csv"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out,
              "setting,B1,B2,B3,B4\n"
              "A1,1,1,1,1\n"
              "A2,1,1,1,-1\n"
              "A3,1,1,-2,0\n"
              "A4,1,-1,0,0\n");
}

TEST(Cli, MatrixOddIsInvalid) {
    const Outcome o = run_cli({"matrix", "3"});
    EXPECT_EQ(o.code, asbell::cli::kExitInvalidInput);
    EXPECT_NE(o.err.find("even"), std::string::npos) << o.err;
}

TEST(Cli, MatrixJsonEight) {
    const json j = run_json({"matrix", "8"});
    const std::vector<std::vector<int>> expected = {
        {1, 1, 1, 1, 1, 1, 1, 1},  {1, 1, 1, 1, 1, 1, 1, -1}, {1, 1, 1, 1, 1, 1, -2, 0},
        {1, 1, 1, 1, 1, -3, 0, 0}, {1, 1, 1, 1, -4, 0, 0, 0}, {1, 1, 1, -3, 0, 0, 0, 0},
        {1, 1, -2, 0, 0, 0, 0, 0}, {1, -1, 0, 0, 0, 0, 0, 0},
    };
    EXPECT_EQ(j["result"]["entries"].get<std::vector<std::vector<int>>>(), expected);
    EXPECT_EQ(j["metadata"]["tool"], "asbell");
    EXPECT_EQ(j["metadata"]["command"], "matrix");
}

TEST(Cli, Bounds) {
    EXPECT_EQ(run_json({"bounds", "2"})["result"]["c_lhv"], 2);
    const json j = run_json({"bounds", "6", "--bruteforce"});
    EXPECT_EQ(j["result"]["c_lhv"], 12);
    EXPECT_EQ(j["result"]["bruteforce"]["value"], 12);
    EXPECT_EQ(j["result"]["bruteforce"]["alice_witness"].size(), 6u);
}

TEST(Cli, BoundsResourceCap) {
    EXPECT_EQ(run_cli({"bounds", "26", "--bruteforce"}).code, asbell::cli::kExitResourceLimit);
}

TEST(Cli, LhsCatalog) {
    const json j = run_json({"lhs", "4"});
    EXPECT_NEAR(j["result"]["c_lhs"].get<double>(), 5.537749242, 1e-9);
    EXPECT_TRUE(j["notes"].empty());
}

TEST(Cli, LhsTenReportsDiscrepancy) {
    const json j = run_json({"lhs", "10"});
    EXPECT_NEAR(j["result"]["c_lhs"].get<double>(), 27.23205809, 1e-8);
    EXPECT_NEAR(j["result"]["published"]["c_lhs"].get<double>(), 27.0955, 1e-12);
    ASSERT_EQ(j["notes"].size(), 2u);
}

TEST(Cli, LhsDirectionFile) {
    const auto path = std::filesystem::temp_directory_path() / "asbell_cli_dirs.json";
    {
        std::ofstream f(path);
        f << R"({"n": 2, "bob": [[0, 0, 1], [1, 0, 0]], "alice": null, "notes": "orthogonal"})";
    }
    const json j = run_json({"lhs", "2", "--directions", path.string()});
    EXPECT_NEAR(j["result"]["c_lhs"].get<double>(), 2.0, 1e-12);
    EXPECT_EQ(j["result"]["directions"], path.string());
    EXPECT_FALSE(j["result"].contains("published"));
    std::filesystem::remove(path);
}

TEST(Cli, SchemaErrorNamesPath) {
    const auto path = std::filesystem::temp_directory_path() / "asbell_cli_bad.json";
    {
        std::ofstream f(path);
        f << R"({"n": 2, "bob": [[0, 0, 1], [1, 0, "x"]]})";
    }
    const Outcome o = run_cli({"lhs", "2", "--directions", path.string()});
    EXPECT_EQ(o.code, asbell::cli::kExitInvalidInput);
    EXPECT_NE(o.err.find("/bob/1/2"), std::string::npos) << o.err;
    std::filesystem::remove(path);
}

TEST(Cli, MissingDirectionFile) {
    EXPECT_EQ(run_cli({"lhs", "2", "--directions", "/nonexistent/dirs.json"}).code, asbell::cli::kExitInvalidInput);
}

TEST(Cli, LhsWithoutCatalog) {
    EXPECT_EQ(run_cli({"lhs", "12"}).code, asbell::cli::kExitInvalidInput);
}

TEST(Cli, ThresholdsSmallN) {
    const double expected_lhs[] = {0.7071067812, 0.6782329983, 0.6757459974};
    const double expected_lhv[] = {0.7071067812, 0.7348469228, 0.742307489};
    for (int k = 0; k < 3; ++k) {
        const json j = run_json({"thresholds", std::to_string(2 + 2 * k)});
        EXPECT_NEAR(j["result"]["v_lhs"].get<double>(), expected_lhs[k], 1e-9);
        EXPECT_NEAR(j["result"]["v_lhv"].get<double>(), expected_lhv[k], 1e-9);
        EXPECT_EQ(j["result"]["quantum_max_source"], "closed_form");
    }
}

TEST(Cli, ThresholdsTen) {
    const json j = run_json({"thresholds", "10"});
    EXPECT_NEAR(j["result"]["v_lhs"].get<double>(), 0.6779823865, 1e-9);
    EXPECT_EQ(j["result"]["published"]["v_lhs_form"], "0.6779");
    EXPECT_NEAR(j["result"]["published"]["v_lhs_from_c_lhs"].get<double>(), 0.6745825708, 1e-9);
    EXPECT_EQ(j["result"]["discrepancies"].size(), 2u);
}

TEST(Cli, ThresholdsOverrides) {
    const json q = run_json({"thresholds", "4", "--quantum-max", "8"});
    EXPECT_NEAR(q["result"]["v_lhv"].get<double>(), 0.75, 1e-12);
    EXPECT_EQ(q["result"]["quantum_max_source"], "user");

    const json s = run_json({"thresholds", "4", "--seesaw", "--restarts", "4", "--seed", "3"});
    EXPECT_NEAR(s["result"]["quantum_max"].get<double>(), 8.164965809, 1e-8);
    EXPECT_EQ(s["metadata"]["seed"], 3);

    EXPECT_EQ(run_cli({"thresholds", "4", "--quantum-max", "-1"}).code, asbell::cli::kExitInvalidInput);
    EXPECT_EQ(run_cli({"thresholds", "4", "--quantum-max", "8", "--seesaw"}).code, asbell::cli::kExitInvalidInput);
}

TEST(Cli, Seesaw) {
    const json j = run_json({"seesaw", "6", "--restarts", "8", "--seed", "1", "--trajectory"});
    EXPECT_NEAR(j["result"]["value"].get<double>(), 16.16580754, 1e-6);
    EXPECT_EQ(j["metadata"]["seed"], 1);
    EXPECT_EQ(j["metadata"]["arguments"]["restarts"], 8);
    EXPECT_TRUE(j["result"]["converged"].get<bool>());
    const auto &traj = j["result"]["trajectory"];
    EXPECT_EQ(traj.size(), 2 * j["result"]["iterations"].get<std::size_t>() + 1);
}

TEST(Cli, SeesawDeterministic) {
    const std::vector<std::string> args = {"seesaw", "8", "--restarts", "6", "--seed", "11", "--format", "json"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, SeesawRejectsBadOptions) {
    EXPECT_EQ(run_cli({"seesaw", "4", "--restarts", "0"}).code, asbell::cli::kExitInvalidInput);
    EXPECT_EQ(run_cli({"seesaw", "4", "--tol", "-1"}).code, asbell::cli::kExitInvalidInput);
}

TEST(Cli, TablesMatchGolden) {
    const auto dir = std::filesystem::temp_directory_path() / "asbell_cli_tables";
    std::filesystem::remove_all(dir);
    const Outcome o = run_cli({"tables", "--out-dir", dir.string()});
    ASSERT_EQ(o.code, 0) << o.err;
    for (const char *name : {"table1.csv", "table2.csv", "figure2.csv", "figure3.csv"}) {
        EXPECT_EQ(slurp(dir / name), slurp(std::filesystem::path(ASBELL_GOLDEN_DIR) / name)) << name;
    }
    std::filesystem::remove_all(dir);
}

TEST(Cli, TablesJsonAndCsvAgree) {
    const json j = run_json({"tables"});
    const Outcome csv = run_cli({"tables", "--format", "csv"});
    for (const auto &row : j["result"]["rows"]) {
        std::ostringstream line;
        line << row["n"].get<int>() << ',' << row["c_lhv"].get<int>() << ',';
        EXPECT_NE(csv.out.find(line.str()), std::string::npos);
    }
    EXPECT_EQ(j["result"]["rows"][1]["c_lhs"].get<double>(), 5.537749242);
    EXPECT_NE(csv.out.find("4,6,5.537749242,"), std::string::npos);
    EXPECT_NE(csv.err.find("N=10"), std::string::npos);
}

TEST(Cli, VerifyDirections) {
    const Outcome two = run_cli({"verify-directions", "2"});
    EXPECT_EQ(two.code, asbell::cli::kExitAnomaly);
    EXPECT_NE(two.out.find("collinear"), std::string::npos);

    const Outcome four = run_cli({"verify-directions", "4", "--format", "json"});
    EXPECT_EQ(four.code, asbell::cli::kExitAnomaly);
    const json j = json::parse(four.out);
    EXPECT_NEAR(j["result"]["achieved"].get<double>(), 4.898979486, 1e-9);
    EXPECT_NEAR(j["result"]["best_response_value"].get<double>(), 8.164965809, 1e-9);

    EXPECT_EQ(run_cli({"verify-directions", "6"}).code, 0);
    EXPECT_EQ(run_cli({"verify-directions", "12"}).code, asbell::cli::kExitInvalidInput);
}

TEST(Cli, Catalog) {
    const json j = run_json({"catalog", "2"});
    EXPECT_EQ(j["result"]["n"], 2);
    EXPECT_EQ(j["result"]["canonical_bob"].size(), 2u);
}

TEST(Cli, ParseErrors) {
    EXPECT_EQ(run_cli({}).code, asbell::cli::kExitInvalidInput);
    EXPECT_EQ(run_cli({"bounds"}).code, asbell::cli::kExitInvalidInput);
    EXPECT_EQ(run_cli({"bounds", "four"}).code, asbell::cli::kExitInvalidInput);
    EXPECT_EQ(run_cli({"matrix", "4", "--format", "xml"}).code, asbell::cli::kExitInvalidInput);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}
