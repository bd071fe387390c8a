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

#include "insqec/oracle.h"

#include <cmath>
#include <random>
#include <tuple>

#include <gtest/gtest.h>

#include "insqec/channel.h"
#include "insqec/errors.h"
#include "insqec/scb.h"
#include "test_util.h"

namespace insqec {
namespace {

using testing::max_abs_diff;
using testing::random_amplitudes;
using testing::random_state;

HalfInt h(int twice) {
    return HalfInt::from_twice(twice);
}

TEST(JzTest, Convention) {
    DenseOperator jz = j_z(1);
    EXPECT_NEAR(std::abs(jz.matrix(1, 1) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(jz.matrix(0, 0) + 0.5), 0, 1e-15);
    DenseState d = dicke(4, 2);
    EXPECT_LT(j_z(4).apply(d).amps.norm(), 1e-14);
    DenseState d5 = dicke(5, 3);
    EXPECT_LT(max_abs_diff(apply_jz(d5), DenseState{5, 0.5 * d5.amps}), 1e-14);
}

TEST(JzTest, DiagonalWithWeightEigenvalue) {
    DenseOperator jz = j_z(6);
    for (Eigen::Index x = 0; x < jz.matrix.rows(); x++) {
        for (Eigen::Index y = 0; y < jz.matrix.cols(); y++) {
            Complex want = x == y ? Complex(hamming_weight(x) - 3.0) : Complex(0);
            ASSERT_NEAR(std::abs(jz.matrix(x, y) - want), 0, 1e-15);
        }
    }
}

TEST(JSquaredTest, SingleSpin) {
    DenseOperator j2 = j_squared(1);
    EXPECT_LT((j2.matrix - 0.75 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(JSquaredTest, Singlet) {
    DenseState singlet = DenseState::zero(2);
    singlet.amps[1] = 1 / std::sqrt(2.0);
    singlet.amps[2] = -1 / std::sqrt(2.0);
    EXPECT_LT(j_squared(2).apply(singlet).amps.norm(), 1e-14);
}

TEST(JSquaredTest, DickeIsMaximalJ) {
    DenseState d = dicke(5, 2);
    EXPECT_LT((j_squared(5).apply(d).amps - 35.0 / 4.0 * d.amps).norm(), 1e-12);
}

TEST(OperatorTest, Hermitian) {
    for (int M = 1; M <= 6; M++) {
        EXPECT_TRUE(j_x(M).is_hermitian());
        EXPECT_TRUE(j_y(M).is_hermitian());
        EXPECT_TRUE(j_z(M).is_hermitian());
        EXPECT_TRUE(j_squared(M).is_hermitian());
    }
}

TEST(OperatorTest, CommutatorsKeepSu2Signs) {
    int M = 4;
    Eigen::MatrixXcd x = j_x(M).matrix, y = j_y(M).matrix, z = j_z(M).matrix;
    Complex i(0, 1);
    EXPECT_LT((x * y - y * x - i * z).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((y * z - z * y - i * x).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((z * x - x * z - i * y).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(OperatorTest, LadderRaisesWeight) {
    DenseState d = dicke(4, 1);
    DenseState up = apply_j_plus(d);
    // J+ |2, -1> = sqrt(2*3 - (-1)(0)) |2, 0>
    EXPECT_LT(max_abs_diff(up, DenseState{4, std::sqrt(6.0) * dicke(4, 2).amps}), 1e-13);
    DenseState down = apply_j_minus(d);
    EXPECT_LT(max_abs_diff(down, DenseState{4, 2.0 * dicke(4, 0).amps}), 1e-13);
}

TEST(OperatorTest, MatrixFreeMatchesDense) {
    std::mt19937_64 gen(1);
    DenseState s = random_state(5, gen);
    EXPECT_LT(max_abs_diff(j_x(5).apply(s), apply_jx(s)), 1e-13);
    EXPECT_LT(max_abs_diff(j_y(5).apply(s), apply_jy(s)), 1e-13);
    EXPECT_LT(max_abs_diff(j_squared(5).apply(s), apply_j_squared(s)), 1e-13);
}

TEST(OperatorTest, ResourceCap) {
    EXPECT_THROW(j_z(kMaxDenseOperatorQubits + 1), ResourceError);
}

TEST(ProjectTotalJTest, SymmetricState) {
    Projection p = project_total_j(dicke(5, 2), h(5));
    EXPECT_NEAR(p.probability, 1, 1e-12);
    EXPECT_FALSE(p.zero_branch);
}

TEST(ProjectTotalJTest, InsertedOneIntoDicke) {
    DenseState s = insert(dicke(4, 2), {0, 1}, 4);
    EXPECT_NEAR(project_total_j(s, h(5)).probability, 3.0 / 5.0, 1e-12);
    EXPECT_NEAR(project_total_j(s, h(3)).probability, 2.0 / 5.0, 1e-12);
    Projection zero = project_total_j(s, h(1));
    EXPECT_TRUE(zero.zero_branch);
    EXPECT_EQ(zero.state.amps.norm(), 0.0);
}

TEST(ProjectTotalJTest, MatchesScbProjector) {
    for (int M = 1; M <= 6; M++) {
        ScbBasis basis = build_scb(M);
        for (HalfInt j : allowed_total_j(M)) {
            Eigen::MatrixXcd poly = total_j_projector(M, j).matrix;
            EXPECT_LT((poly - basis.sector_projector(j)).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(ProjectTotalJTest, CompleteIdempotentHermitian) {
    for (int M = 1; M <= 7; M++) {
        Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(1 << M, 1 << M);
        for (HalfInt j : allowed_total_j(M)) {
            DenseOperator p = total_j_projector(M, j);
            EXPECT_TRUE(p.is_hermitian(1e-10));
            EXPECT_LT((p.matrix * p.matrix - p.matrix).cwiseAbs().maxCoeff(), 1e-10);
            total += p.matrix;
        }
        EXPECT_LT((total - Eigen::MatrixXcd::Identity(1 << M, 1 << M)).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(ProjectTotalJTest, ProbabilityCompletenessUpToFourteen) {
    std::mt19937_64 gen(2);
    for (int M : {11, 12, 13, 14}) {
        DenseState s = random_state(M, gen);
        double total = 0;
        for (HalfInt j : allowed_total_j(M)) {
            total += project_total_j(s, j).probability;
        }
        EXPECT_NEAR(total, 1, 1e-10) << M;
    }
}

TEST(ProjectTotalJTest, RejectsDisallowedJ) {
    EXPECT_THROW(project_total_j(dicke(4, 2), h(3)), std::invalid_argument);
}

TEST(ProjectWTest, FourQubitCodeZeroInsertion) {
    DenseState s = insert(encode(GnuCode(2, 2, 1), {1, 0}), {1, 0}, 0);
    Projection pj = project_total_j(s, h(5));
    Projection pw = project_w_mod_g(pj.state, h(5), 2, 0);
    EXPECT_NEAR(pw.probability, 1, 1e-12);
}

TEST(ProjectWTest, MixedSectorOneInsertion) {
    DenseState s = insert(encode(GnuCode(2, 2, 1), {0, 1}), {0, 1}, 4);
    Projection pj = project_total_j(s, h(3));
    ASSERT_FALSE(pj.zero_branch);
    EXPECT_NEAR(project_w_mod_g(pj.state, h(3), 2, 0).probability, 1, 1e-12);
}

TEST(ProjectWTest, OnlyTwoValuesSurvive) {
    std::mt19937_64 gen(9);
    GnuCode code(4, 2, 1);
    DenseState s = insert(encode(code, random_amplitudes(gen)), random_amplitudes(gen), 3);
    HalfInt j = h(code.num_qubits() + 1);
    Projection pj = project_total_j(s, j);
    for (int w = 2; w < code.g(); w++) {
        EXPECT_LT(project_w_mod_g(pj.state, j, code.g(), w).probability, 1e-12);
    }
}

TEST(ProjectWTest, Errors) {
    DenseState s = dicke(4, 2);
    EXPECT_THROW(project_w_mod_g(s, h(4), 2, 2), std::out_of_range);
    EXPECT_THROW(project_w_mod_g(s, h(4), 2, -1), std::out_of_range);
    DenseState outside = insert(dicke(4, 2), {0, 1}, 4);
    EXPECT_THROW(project_w_mod_g(outside, h(5), 2, 0), LeakageError);
}

TEST(ProjectWTest, CommutesWithTotalJ) {
    std::mt19937_64 gen(10);
    DenseState s = random_state(6, gen);
    for (HalfInt j : allowed_total_j(6)) {
        for (int w = 0; w < 3; w++) {
            DenseState a = apply_w_projector(apply_total_j_projector(s, j), j, 3, w);
            DenseState b = apply_total_j_projector(apply_w_projector(s, j, 3, w), j);
            EXPECT_LT(max_abs_diff(a, b), 1e-10);
        }
    }
}

TEST(SupportTest, InsertionReachesOnlyTwoSectors) {
    std::mt19937_64 gen(12);
    for (auto [g, n, u] : {std::tuple{2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {2, 2, 2}}) {
        GnuCode code(g, n, u);
        int N = code.num_qubits();
        DenseState s = encode(code, random_amplitudes(gen));
        for (int a = 0; a <= N; a++) {
            DenseState psi = insert(s, random_amplitudes(gen), a);
            for (HalfInt j : allowed_total_j(N + 1)) {
                if (j.twice() == N + 1 || j.twice() == N - 1) {
                    continue;
                }
                EXPECT_LT(project_total_j(psi, j).probability, 1e-12);
            }
        }
    }
}

TEST(BornTest, DeterministicOutcome) {
    MeasurementRecord r = born_sample(dicke(5, 2), total_j_projectors(5), 42);
    EXPECT_EQ(r.label, "j=5/2");
    EXPECT_NEAR(r.probability, 1, 1e-12);
    EXPECT_NEAR(r.post_state.norm_squared(), 1, 1e-12);
}

TEST(BornTest, FrequencyMatchesBornRule) {
    DenseState s = insert(dicke(4, 2), {0, 1}, 4);
    std::vector<double> probs = born_probabilities(s, total_j_projectors(5));
    Rng rng(2026);
    int hits = 0;
    const int shots = 100000;
    for (int t = 0; t < shots; t++) {
        if (sample_index(probs, rng) == 0) {
            hits++;
        }
    }
    EXPECT_NEAR(hits / static_cast<double>(shots), 0.6, 0.005);
}

TEST(BornTest, SeedReproducible) {
    std::mt19937_64 gen(13);
    DenseState s = random_state(5, gen);
    Rng a(99), b(99);
    for (int t = 0; t < 50; t++) {
        EXPECT_EQ(born_sample(s, total_j_projectors(5), a).outcome, born_sample(s, total_j_projectors(5), b).outcome);
    }
}

TEST(BornTest, RejectsIncompleteSet) {
    ProjectorSet partial = total_j_projectors(4);
    partial.pop_back();
    std::mt19937_64 gen(14);
    EXPECT_THROW(born_probabilities(random_state(4, gen), partial), std::invalid_argument);
}

TEST(WClassTest, MatchesWeight) {
    // Inside j = M/2, j + m = k.
    EXPECT_EQ(w_class(5, h(5), 3, 2), 1);
    // j = (M-2)/2: j + m = k - 1.
    EXPECT_EQ(w_class(5, h(3), 3, 2), 0);
    EXPECT_EQ(w_class(7, h(5), 1, 3), 0);
}

}  // namespace
}  // namespace insqec
