// Copyright 2026 The insqec Authors
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

#include "insqec/experiment.h"

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace insqec {
namespace {

using nlohmann::json;

ExperimentConfig parse(const std::string &text, std::vector<std::string> &warnings) {
    return parse_config(json::parse(text), warnings);
}

double probability_of(const json &dist, int twice_j, int w) {
    for (const auto &e : dist) {
        if (e["twice_j"] == twice_j && e["w"] == w) {
            return e["probability"].get<double>();
        }
    }
    return 0;
}

TEST(ConfigTest, Defaults) {
    std::vector<std::string> warnings;
    ExperimentConfig cfg = parse("{}", warnings);
    EXPECT_EQ(cfg.g, 2);
    EXPECT_EQ(cfg.mode, "single");
    EXPECT_FALSE(cfg.position.has_value());
    EXPECT_TRUE(warnings.empty());
}

TEST(ConfigTest, ReadsAllKeys) {
    std::vector<std::string> warnings;
    ExperimentConfig cfg = parse(R"({"g": 3, "n": 2, "u": 2, "payload": [0.6, [0, 0.8]], "v": [1, 0],
        "position": 5, "shots": 10, "seed": 42, "mode": "montecarlo", "format": "csv",
        "grid": [[2, 2, 1]]})",
                                 warnings);
    EXPECT_EQ(cfg.g, 3);
    EXPECT_EQ(cfg.u, 2);
    EXPECT_EQ(cfg.payload.c1, Complex(0, 0.8));
    EXPECT_EQ(cfg.insertion.c0, Complex(1));
    EXPECT_EQ(cfg.position, 5);
    EXPECT_EQ(cfg.shots, 10u);
    EXPECT_EQ(cfg.seed, 42u);
    EXPECT_EQ(cfg.mode, "montecarlo");
    EXPECT_EQ(cfg.grid->size(), 1u);
    EXPECT_NO_THROW(check_config(cfg));
}

TEST(ConfigTest, RandomPositionOverridesBase) {
    std::vector<std::string> warnings;
    ExperimentConfig base;
    base.position = 2;
    EXPECT_FALSE(parse_config(json::parse(R"({"a": "random"})"), warnings, base).position.has_value());
}

TEST(ConfigTest, NearlyNormalizedIsRescaled) {
    std::vector<std::string> warnings;
    ExperimentConfig cfg = parse(R"({"payload": [0.6, 0.8000001]})", warnings);
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("renormalized"), std::string::npos);
    EXPECT_NEAR(std::norm(cfg.payload.c0) + std::norm(cfg.payload.c1), 1, 1e-15);
}

TEST(ConfigTest, Rejections) {
    std::vector<std::string> w;
    EXPECT_THROW(parse(R"({"payload": [0.6, 0.7]})", w), ConfigError);
    EXPECT_THROW(parse(R"({"payload": [1]})", w), ConfigError);
    EXPECT_THROW(parse(R"({"colour": 1})", w), ConfigError);
    EXPECT_THROW(parse(R"({"g": 2.5})", w), ConfigError);
    EXPECT_THROW(parse(R"({"shots": 0})", w), ConfigError);
    EXPECT_THROW(parse(R"({"seed": -1})", w), ConfigError);
    EXPECT_THROW(parse(R"({"mode": "fast"})", w), ConfigError);
    EXPECT_THROW(parse(R"({"grid": [[2, 2]]})", w), ConfigError);
    EXPECT_THROW(parse("[1]", w), ConfigError);
}

TEST(ConfigTest, CheckReportsCodeErrors) {
    ExperimentConfig cfg;
    cfg.g = 1;
    try {
        check_config(cfg);
        FAIL();
    } catch (const ConfigError &e) {
        EXPECT_STREQ(e.what(), "code gap g must satisfy g >= 2, got 1");
    }
    cfg = {};
    cfg.position = 5;
    EXPECT_THROW(check_config(cfg), ConfigError);
    cfg.position = 4;
    EXPECT_NO_THROW(check_config(cfg));
    cfg.shots = kMaxShots + 1;
    EXPECT_THROW(check_config(cfg), ConfigError);
    cfg = {};
    cfg.grid = std::vector<std::array<int, 3>>{{2, 0, 1}};
    EXPECT_THROW(check_config(cfg), ConfigError);
}

TEST(WilsonTest, KnownValues) {
    auto ci = wilson_interval(50, 100);
    EXPECT_NEAR(ci[0], 0.4038315303659956, 1e-12);
    EXPECT_NEAR(ci[1], 0.5961684696340044, 1e-12);
    auto zero = wilson_interval(0, 10);
    EXPECT_EQ(zero[0], 0);
    EXPECT_GT(zero[1], 0.2);
    auto none = wilson_interval(0, 0);
    EXPECT_EQ(none[0], 0);
    EXPECT_EQ(none[1], 1);
}

TEST(RunSingleTest, FourQubitCode) {
    ExperimentConfig cfg;
    cfg.position = 4;
    cfg.seed = 7;
    Report r = run_single(cfg);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.body["schema"], "insqec/1");
    EXPECT_EQ(r.body["status"], "pass");
    EXPECT_NEAR(probability_of(r.body["analytic"], 5, 1), 0.6, 1e-15);
    EXPECT_NEAR(probability_of(r.body["analytic"], 3, 0), 0.4, 1e-15);
    EXPECT_NEAR(probability_of(r.body["oracle"], 5, 1), 0.6, 1e-12);
    EXPECT_LE(r.body["max_distribution_deviation"].get<double>(), 1e-12);
    EXPECT_GE(r.body["recovery"]["fidelity"].get<double>(), 1 - 1e-9);
    EXPECT_NE(r.csv.find("twice_j,w,analytic,oracle"), std::string::npos);
}

TEST(RunSingleTest, DeterministicWithRandomPosition) {
    ExperimentConfig cfg;
    cfg.g = 3;
    cfg.payload = {0.6, Complex(0, 0.8)};
    cfg.insertion = {0.8, 0.6};
    cfg.seed = 99;
    Report a = run_single(cfg);
    Report b = run_single(cfg);
    EXPECT_EQ(a.body.dump(), b.body.dump());
    int pos = a.body["position"];
    EXPECT_GE(pos, 0);
    EXPECT_LE(pos, 6);
    EXPECT_EQ(a.exit_code, 0);
}

TEST(RunMonteCarloTest, FrequencyConverges) {
    ExperimentConfig cfg;
    cfg.mode = "montecarlo";
    cfg.position = 4;
    cfg.shots = 100000;
    cfg.seed = 3;
    Report r = run(cfg);
    EXPECT_EQ(r.exit_code, 0);
    for (const auto &row : r.body["rows"]) {
        EXPECT_TRUE(row["within_3sigma"].get<bool>());
        if (row["twice_j"] == 5 && row["w"] == 1) {
            EXPECT_NEAR(row["frequency"].get<double>(), 0.6, 0.005);
        }
    }
}

TEST(RunMonteCarloTest, RandomPositionSingleShot) {
    ExperimentConfig cfg;
    cfg.mode = "montecarlo";
    cfg.shots = 1;
    cfg.seed = 11;
    Report r = run(cfg);
    EXPECT_EQ(r.body["position"], "random");
    uint64_t total = 0;
    for (const auto &[k, c] : r.body["position_counts"].items()) {
        total += c.get<uint64_t>();
    }
    EXPECT_EQ(total, 1u);
    EXPECT_EQ(r.body.dump(), run(cfg).body.dump());
}

TEST(ThreadingTest, OutputIndependentOfWorkerCount) {
    ExperimentConfig mc;
    mc.mode = "montecarlo";
    mc.g = 3;
    mc.shots = 5003;
    mc.seed = 17;
    mc.insertion = {0.6, 0.8};
    ExperimentConfig sweep;
    sweep.mode = "sweep";
    sweep.shots = 300;
    sweep.grid = std::vector<std::array<int, 3>>{{2, 2, 1}, {3, 2, 1}, {2, 3, 1}};
    setenv("INSQEC_THREADS", "1", 1);
    std::string mc1 = run(mc).body.dump();
    std::string sw1 = run(sweep).csv;
    setenv("INSQEC_THREADS", "4", 1);
    std::string mc4 = run(mc).body.dump();
    std::string sw4 = run(sweep).csv;
    unsetenv("INSQEC_THREADS");
    EXPECT_EQ(mc1, mc4);
    EXPECT_EQ(sw1, sw4);
}

TEST(RunLemmaTest, EmptyGridWarns) {
    ExperimentConfig cfg;
    cfg.mode = "lemma";
    cfg.grid = std::vector<std::array<int, 3>>{};
    Report r = run(cfg);
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_EQ(r.exit_code, 0);
}

TEST(RunLemmaTest, ScaledCellPasses) {
    ExperimentConfig cfg;
    cfg.mode = "lemma";
    cfg.grid = std::vector<std::array<int, 3>>{{2, 2, 3}, {3, 2, 1}};
    Report r = run(cfg);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.body["cells"].size(), 2u);
    EXPECT_NE(r.csv.find("2,2,3,pass"), std::string::npos);
}

TEST(RunExampleTest, Passes) {
    Report r = run_example();
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_LT(r.body["max_amplitude_deviation"].get<double>(), 1e-10);
    EXPECT_EQ(r.body["symmetric"].size(), 4u);
    EXPECT_EQ(r.body["mixed"].size(), 5u * 2u * 2u);
}

TEST(RunSweepTest, SmallGrid) {
    ExperimentConfig cfg;
    cfg.mode = "sweep";
    cfg.shots = 2000;
    cfg.grid = std::vector<std::array<int, 3>>{{2, 2, 1}};
    Report r = run(cfg);
    EXPECT_EQ(r.exit_code, 0);
    const json &positions = r.body["cells"][0]["positions"];
    ASSERT_EQ(positions.size(), 5u);
    for (const auto &p : positions) {
        double total = 0;
        for (const auto &row : p["rows"]) {
            total += row["frequency"].get<double>();
        }
        EXPECT_NEAR(total, 1, 1e-12);
    }
}

}  // namespace
}  // namespace insqec
