// Copyright 2026 The Tripartite Authors
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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "tripartite/io.h"

using nlohmann::json;
using tripartite::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "tripartite");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("tripartite_cli_test_" + name);
}

}  // namespace

TEST(cli, reproduce_passes) {
    auto r = invoke({"reproduce"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("S_V @ (90°, 0°)"), std::string::npos);
    EXPECT_NE(r.out.find("all rows pass"), std::string::npos);

    auto j = invoke({"reproduce", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    auto parsed = json::parse(j.out);
    EXPECT_TRUE(parsed["all_pass"].get<bool>());
    bool saw_row = false;
    for (const auto &row : parsed["rows"]) {
        if (row["id"] == "svetlichny_w_criticized") {
            saw_row = true;
            EXPECT_NEAR(row["value"].get<double>(), 3.0, 1e-9);
            EXPECT_TRUE(row["pass"].get<bool>());
        }
        if (row["id"] == "lhv_mermin_hybrid") {
            EXPECT_EQ(row["value"].get<double>(), 4.0);
        }
    }
    EXPECT_TRUE(saw_row);
}

TEST(cli, reproduce_reports_mismatch_with_exit_1) {
    auto path = temp_path("bad_manifest.json");
    {
        std::ofstream f(path);
        f << R"({"rows": [{"id": "svetlichny_w_criticized", "label": "S_V", "expected": 4.0, "tolerance": 1e-9}]})";
    }
    auto r = invoke({"reproduce", "--manifest", path.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(cli, reproduce_rejects_unknown_rows) {
    auto path = temp_path("unknown_manifest.json");
    {
        std::ofstream f(path);
        f << R"({"rows": [{"id": "nonsense", "label": "x", "expected": 1, "tolerance": 1}]})";
    }
    auto r = invoke({"reproduce", "--manifest", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(r.err)["error"]["exit_code"], 2);
    EXPECT_EQ(invoke({"reproduce", "--manifest", "/nonexistent/manifest.json"}).code, 2);
    std::filesystem::remove(path);
}

TEST(cli, optimize_w_svetlichny) {
    auto r = invoke({"optimize", "--state", "w", "--functional", "svetlichny", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), 4.354, 1e-3);
    EXPECT_EQ(j["report"]["classification"], "rules_out_hybrid");
    EXPECT_EQ(j["settings"].size(), 3u);
    EXPECT_FALSE(j.contains("trace"));

    auto traced = json::parse(invoke({"optimize", "--format", "json", "--trace"}).out);
    EXPECT_FALSE(traced["trace"].empty());
    auto csv = invoke({"optimize", "--format", "csv"});
    EXPECT_EQ(csv.out.substr(0, 16), "iteration,value\n");
}

TEST(cli, optimize_bad_grid_is_usage_error) {
    EXPECT_EQ(invoke({"optimize", "--grid-step", "7"}).code, 2);
    EXPECT_EQ(invoke({"optimize", "--functional", "chsh"}).code, 2);
}

TEST(cli, lhv_scan) {
    auto r = invoke({"lhv-scan", "--functional", "mermin", "--model", "local", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["max"], 2.0);
    EXPECT_EQ(j["strategies_enumerated"], 64);

    auto all = json::parse(invoke({"lhv-scan", "--format", "json"}).out);
    ASSERT_EQ(all["results"].size(), 4u);
    auto csv = invoke({"lhv-scan", "--format", "csv"}).out;
    EXPECT_NE(csv.find("mermin,hybrid,4,"), std::string::npos);
    EXPECT_EQ(invoke({"lhv-scan", "--model", "quantum"}).code, 2);
}

TEST(cli, sample_zero_shots_is_usage_error) {
    auto r = invoke({"sample", "--state", "w", "--pairs", "90,0", "--shots", "0"});
    EXPECT_EQ(r.code, 2);
    auto err = json::parse(r.err);
    EXPECT_EQ(err["error"]["exit_code"], 2);
    EXPECT_EQ(err["error"]["kind"], "usage");
}

TEST(cli, usage_errors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"sample", "--state", "w"}).code, 2);                      // --pairs missing
    EXPECT_EQ(invoke({"sample", "--pairs", "1,2,3"}).code, 2);                   // wrong arity
    EXPECT_EQ(invoke({"correlations", "--state", "nope", "--pairs", "0,0"}).code, 2);
    EXPECT_EQ(invoke({"correlations"}).code, 2);
    EXPECT_EQ(invoke({"correlations", "--angles", "1,2"}).code, 2);
    EXPECT_EQ(invoke({"correlations", "--pairs", "90,0", "--visibility", "1.5"}).code, 2);
    EXPECT_EQ(invoke({"correlations", "--pairs", "90,0", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"correlations", "--state", "file", "--pairs", "90,0"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(cli, sample_is_deterministic) {
    std::vector<std::string> args{"sample", "--pairs", "35.264,144.736", "--shots", "20000", "--seed", "7", "--format",
                                  "json"};
    auto a = invoke(args);
    auto b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto j = json::parse(a.out);
    EXPECT_EQ(j["counts"]["shots_per_setting"], 20000);
    EXPECT_EQ(j["report"]["functional"], "svetlichny");
    auto csv = invoke({"sample", "--pairs", "90,0", "--shots", "10", "--format", "csv"});
    EXPECT_EQ(csv.out.substr(0, 20), "i,j,k,outcome,count\n");
}

TEST(cli, correlations_pairs_and_angles) {
    auto r = invoke({"correlations", "--pairs", "90,0", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_NEAR(j["mermin"]["value"].get<double>(), 3.0, 1e-12);
    EXPECT_NEAR(j["svetlichny"]["value"].get<double>(), 3.0, 1e-12);
    EXPECT_EQ(j["svetlichny"]["classification"], "consistent_with_local");
    EXPECT_EQ(j["mermin"]["classification"], "rules_out_local_only");

    auto rad = json::parse(invoke({"correlations", "--pairs", "1.5707963267948966,0", "--radians", "--format", "json"}).out);
    EXPECT_NEAR(rad["svetlichny"]["value"].get<double>(), 3.0, 1e-12);

    auto angles = json::parse(invoke({"correlations", "--angles", "90,90,0", "--format", "json"}).out);
    EXPECT_NEAR(angles["correlation"].get<double>(), 2.0 / 3.0, 1e-12);
    EXPECT_EQ(angles["distribution"].size(), 8u);

    auto degenerate = json::parse(invoke({"correlations", "--pairs", "30,30", "--format", "json"}).out);
    EXPECT_TRUE(degenerate["svetlichny"]["degenerate"].get<bool>());

    auto noisy = json::parse(invoke({"correlations", "--pairs", "90,0", "--visibility", "0.5", "--format", "json"}).out);
    EXPECT_NEAR(noisy["svetlichny"]["value"].get<double>(), 1.5, 1e-12);

    auto ghz = json::parse(invoke({"correlations", "--state", "ghz-rl", "--pairs", "90,0", "--format", "json"}).out);
    EXPECT_NEAR(ghz["mermin"]["value"].get<double>(), -4.0, 1e-12);
}

TEST(cli, state_file) {
    auto path = temp_path("w_state.json");
    {
        std::ofstream f(path);
        f << tripartite::io::to_json(tripartite::make_w()).dump();
    }
    auto from_file = invoke({"correlations", "--state", "file", "--state-file", path.string(), "--pairs", "90,0",
                             "--format", "json"});
    auto builtin = invoke({"correlations", "--state", "w", "--pairs", "90,0", "--format", "json"});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(from_file.out, builtin.out);

    {
        std::ofstream f(path);
        f << "[[1,0],[1,0]]";
    }
    EXPECT_EQ(invoke({"correlations", "--state", "file", "--state-file", path.string(), "--pairs", "90,0"}).code, 2);
    std::filesystem::remove(path);
}

TEST(cli, output_file) {
    auto path = temp_path("out.json");
    auto r = invoke({"lhv-scan", "--functional", "svetlichny", "--model", "hybrid", "--format", "json", "-o",
                     path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    auto j = json::parse(in);
    EXPECT_EQ(j["max"], 4.0);
    std::filesystem::remove(path);
}

TEST(cli, json_output_round_trips_byte_for_byte) {
    std::vector<std::vector<std::string>> commands{
        {"reproduce", "--format", "json"},
        {"optimize", "--state", "ghz-rl", "--format", "json", "--trace"},
        {"lhv-scan", "--format", "json"},
        {"sample", "--pairs", "35.264,144.736", "--shots", "1000", "--format", "json"},
        {"correlations", "--pairs", "90,0", "--format", "json"},
        {"correlations", "--angles", "10,20,30", "--format", "json"},
    };
    for (const auto &cmd : commands) {
        auto r = invoke(cmd);
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(json::parse(r.out).dump(2) + "\n", r.out) << cmd[0];
    }
}
