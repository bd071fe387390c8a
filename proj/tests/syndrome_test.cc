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

#include "insqec/syndrome.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "insqec/channel.h"
#include "test_util.h"

namespace insqec {
namespace {

using testing::random_amplitudes;

HalfInt h(int twice) {
    return HalfInt::from_twice(twice);
}

TEST(ExtractTest, PostStateInSectorAndClass) {
    std::mt19937_64 gen(41);
    GnuCode code(3, 2, 1);
    DenseState psi = insert(encode(code, random_amplitudes(gen)), random_amplitudes(gen), 3);
    for (uint64_t seed = 0; seed < 20; seed++) {
        SyndromeExtraction ex = extract_syndrome(psi, code.g(), seed);
        EXPECT_NEAR(ex.post_state.norm_squared(), 1, 1e-12);
        EXPECT_LT(sector_residual(ex.post_state, ex.syndrome.key.j), 1e-9);
        HalfInt j = ex.syndrome.key.j;
        for (const auto &[k, p] : ex.post_state.weight_histogram()) {
            EXPECT_EQ(w_class(psi.num_qubits, j, k, code.g()), ex.syndrome.key.w);
        }
        EXPECT_GT(ex.syndrome.probability(), 0);
    }
}

TEST(ExtractTest, SeedDeterminism) {
    std::mt19937_64 gen(42);
    GnuCode code(2, 3, 1);
    DenseState psi = insert(encode(code, random_amplitudes(gen)), random_amplitudes(gen), 2);
    for (uint64_t seed = 100; seed < 110; seed++) {
        EXPECT_EQ(extract_syndrome(psi, code.g(), seed).syndrome.key,
                  extract_syndrome(psi, code.g(), seed).syndrome.key);
    }
}

TEST(ExtractTest, RejectsBadGap) {
    EXPECT_THROW(extract_syndrome(dicke(3, 1), 1, uint64_t{0}), std::invalid_argument);
    EXPECT_THROW(oracle_syndrome_distribution(dicke(3, 1), 1), std::invalid_argument);
}

TEST(DistributionTest, CoversLadderAndSumsToOne) {
    std::mt19937_64 gen(43);
    DenseState psi = testing::random_state(6, gen);
    auto dist = oracle_syndrome_distribution(psi, 3);
    EXPECT_EQ(dist.size(), 4u * 3u);
    double total = 0;
    for (const auto &[key, p] : dist) {
        total += p;
    }
    EXPECT_NEAR(total, 1, 1e-10);
    EXPECT_LE(support(dist, 0.01).size(), dist.size());
}

TEST(DistributionTest, FourQubitSpotValues) {
    auto dist = support(oracle_syndrome_distribution(insert(dicke(4, 2), {0, 1}, 4), 2));
    ASSERT_EQ(dist.size(), 2u);
    EXPECT_NEAR(dist.at({h(5), 1}), 0.6, 1e-12);
    EXPECT_NEAR(dist.at({h(3), 0}), 0.4, 1e-12);
}

TEST(SampleTest, MatchesTwoStageExtraction) {
    std::mt19937_64 gen(44);
    GnuCode code(2, 2, 1);
    DenseState psi = insert(encode(code, random_amplitudes(gen)), random_amplitudes(gen), 1);
    auto dist = oracle_syndrome_distribution(psi, code.g());
    for (uint64_t seed = 0; seed < 200; seed++) {
        Rng a(seed), b(seed);
        EXPECT_EQ(extract_syndrome(psi, code.g(), a).syndrome.key, sample_syndrome(dist, b).key);
    }
}

TEST(SampleTest, FrequencyConcentration) {
    auto dist = oracle_syndrome_distribution(insert(dicke(4, 2), {0, 1}, 4), 2);
    const int shots = 100000;
    int hits = 0;
    for (int s = 0; s < shots; s++) {
        Rng rng = Rng::stream(77, static_cast<uint64_t>(s));
        if (sample_syndrome(dist, rng).key == SyndromeKey{h(5), 1}) {
            hits++;
        }
    }
    EXPECT_NEAR(hits / static_cast<double>(shots), 0.6, 0.005);
}

TEST(SyndromeJsonTest, Fields) {
    Syndrome s{{h(5), 1}, 0.6, 1.0};
    nlohmann::json j = s.to_json();
    EXPECT_EQ(j["twice_j"], 5);
    EXPECT_EQ(j["j"], "5/2");
    EXPECT_EQ(j["w"], 1);
    EXPECT_DOUBLE_EQ(j["probability"].get<double>(), 0.6);
}

TEST(RngTest, SplitStreamsDiffer) {
    EXPECT_NE(split_seed(1, 0), split_seed(1, 1));
    EXPECT_NE(split_seed(1, 0), split_seed(2, 0));
    Rng a = Rng::stream(5, 3), b = Rng::stream(5, 3);
    for (int i = 0; i < 10; i++) {
        double u = a.uniform();
        EXPECT_EQ(u, b.uniform());
        EXPECT_GE(u, 0);
        EXPECT_LT(u, 1);
    }
}

}  // namespace
}  // namespace insqec
