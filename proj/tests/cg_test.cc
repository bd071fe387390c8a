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

#include "insqec/cg.h"

#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "insqec/errors.h"

namespace insqec {
namespace {

HalfInt h(int twice) {
    return HalfInt::from_twice(twice);
}

// Reference coefficients built without any closed form: couple |j1 m1>|j2 m2>
// with explicit ladder matrices, Gram-Schmidt for each new total, and the
// Condon-Shortley sign rule <j1 j1; j2 j-j1 | j j> > 0.
class LadderCg {
   public:
    LadderCg(HalfInt j1, HalfInt j2) : d1_(j1.twice() + 1), d2_(j2.twice() + 1), j1_(j1), j2_(j2) {
        int dim = d1_ * d2_;
        Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(dim, dim);
        for (int a = 0; a < d1_; a++) {
            for (int b = 0; b < d2_; b++) {
                int from = index(a, b);
                double m1 = j1.value() - a, m2 = j2.value() - b;
                if (a + 1 < d1_) {
                    lower(index(a + 1, b), from) += std::sqrt(j1.value() * (j1.value() + 1) - m1 * (m1 - 1));
                }
                if (b + 1 < d2_) {
                    lower(index(a, b + 1), from) += std::sqrt(j2.value() * (j2.value() + 1) - m2 * (m2 - 1));
                }
            }
        }
        HalfInt top = j1 + j2;
        HalfInt bottom = (j1 - j2).abs();
        for (HalfInt j = top; j >= bottom; j -= HalfInt::integer(1)) {
            // |j, j> : orthogonal to every |j', j> with j' > j already built.
            Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
            int a0 = 0;
            int b0 = (j1 + j2 - j).twice() / 2;
            v(index(a0, b0)) = 1;
            for (HalfInt jp = top; jp > j; jp -= HalfInt::integer(1)) {
                const Eigen::VectorXd &u = states_.at({jp.twice(), j.twice()});
                v -= u.dot(v) * u;
            }
            v.normalize();
            if (v(index(0, b0)) < 0) {
                v = -v;
            }
            states_[{j.twice(), j.twice()}] = v;
            for (HalfInt m = j - HalfInt::integer(1); m >= -j; m -= HalfInt::integer(1)) {
                Eigen::VectorXd next = lower * states_.at({j.twice(), (m + HalfInt::integer(1)).twice()});
                states_[{j.twice(), m.twice()}] = next.normalized();
            }
        }
    }

    double operator()(HalfInt m1, HalfInt m2, HalfInt j, HalfInt m) const {
        auto it = states_.find({j.twice(), m.twice()});
        if (it == states_.end()) {
            return 0;
        }
        return it->second(index((j1_ - m1).twice() / 2, (j2_ - m2).twice() / 2));
    }

   private:
    int index(int a, int b) const {
        return a * d2_ + b;
    }
    int d1_, d2_;
    HalfInt j1_, j2_;
    std::map<std::pair<int, int>, Eigen::VectorXd> states_;
};

TEST(CgTest, StretchedStateIsOne) {
    EXPECT_DOUBLE_EQ(cg({h(4), h(-4), kHalf, -kHalf, h(5), h(-5)}), 1.0);
}

TEST(CgTest, MixedInstance) {
    EXPECT_NEAR(cg({h(4), h(0), kHalf, kHalf, h(3), kHalf}), -std::sqrt(2.0 / 5.0), 1e-15);
}

TEST(CgTest, SelectionRuleGivesExactZero) {
    EXPECT_EQ(cg({h(4), h(0), kHalf, kHalf, h(3), h(-1)}), 0.0);
    CgExact e = cg_exact({h(2), h(2), h(2), h(0), h(2), h(0)});
    EXPECT_EQ(e.sign, 0);
    EXPECT_EQ(e.squared, 0);
}

TEST(CgTest, InvalidCouplingThrows) {
    // triangle rule
    EXPECT_THROW(cg({h(2), h(0), kHalf, kHalf, h(5), kHalf}), InvalidCoupling);
    // parity of (j, m)
    EXPECT_THROW(cg({h(2), h(1), kHalf, kHalf, h(3), h(2)}), InvalidCoupling);
    // |m| > j
    EXPECT_THROW(cg({h(2), h(4), kHalf, kHalf, h(3), h(5)}), InvalidCoupling);
    // j1 + j2 + j not an integer
    EXPECT_THROW(cg({h(2), h(0), kHalf, kHalf, h(2), h(0)}), InvalidCoupling);
}

TEST(CgTest, ExactValueIsRational) {
    CgExact e = cg_exact({h(4), h(0), kHalf, kHalf, h(3), kHalf});
    EXPECT_EQ(e.sign, -1);
    EXPECT_EQ(e.squared, Rational(2, 5));
}

TEST(CgTest, MatchesLadderReference) {
    for (int tj1 = 0; tj1 <= 8; tj1++) {
        for (int tj2 : {1, 2, 3, 4}) {
            LadderCg ref(h(tj1), h(tj2));
            for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
                for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                        int tm = tm1 + tm2;
                        if (std::abs(tm) > tj) {
                            continue;
                        }
                        double got = cg({h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm)});
                        double want = ref(h(tm1), h(tm2), h(tj), h(tm));
                        ASSERT_NEAR(got, want, 1e-12) << tj1 << " " << tm1 << " " << tj2 << " " << tm2 << " " << tj;
                    }
                }
            }
        }
    }
}

TEST(CgTest, RandomArgumentsMatchLadderReference) {
    std::mt19937_64 gen(20261015);
    std::uniform_int_distribution<int> pick(0, 12);
    for (int trial = 0; trial < 200; trial++) {
        int tj1 = pick(gen), tj2 = pick(gen) % 7;
        LadderCg ref(h(tj1), h(tj2));
        int tj = std::abs(tj1 - tj2) + 2 * (pick(gen) % (std::min(tj1, tj2) + 1));
        int tm1 = -tj1 + 2 * (pick(gen) % (tj1 + 1));
        int tm2 = -tj2 + 2 * (pick(gen) % (tj2 + 1));
        if (std::abs(tm1 + tm2) > tj) {
            continue;
        }
        EXPECT_NEAR(cg({h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm1 + tm2)}),
                    ref(h(tm1), h(tm2), h(tj), h(tm1 + tm2)), 1e-12);
    }
}

TEST(CgTest, Orthogonality) {
    for (int tj1 = 0; tj1 <= 12; tj1++) {
        for (int tj2 : {1, 2, 3}) {
            for (int tm = -(tj1 + tj2); tm <= tj1 + tj2; tm += 2) {
                for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2) {
                    for (int tjp = std::abs(tj1 - tj2); tjp <= tj1 + tj2; tjp += 2) {
                        if (std::abs(tm) > tj || std::abs(tm) > tjp) {
                            continue;
                        }
                        double sum = 0;
                        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                            int tm2 = tm - tm1;
                            if (std::abs(tm2) > tj2) {
                                continue;
                            }
                            sum += cg({h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm)}) *
                                   cg({h(tj1), h(tm1), h(tj2), h(tm2), h(tjp), h(tm)});
                        }
                        ASSERT_NEAR(sum, tj == tjp ? 1.0 : 0.0, 1e-12);
                    }
                }
            }
        }
    }
}

TEST(CgTest, SymmetricClosedFormExamples) {
    EXPECT_NEAR(cg_ohara_symmetric(4, 0, kHalf), std::sqrt(1.0 / 5.0), 1e-15);
    EXPECT_NEAR(cg_ohara_symmetric(4, 4, kHalf), 1.0, 1e-15);
    EXPECT_NEAR(cg_ohara_symmetric(9, 3, -kHalf), std::sqrt(84.0 / 120.0), 1e-15);
}

TEST(CgTest, MixedClosedFormExamples) {
    EXPECT_NEAR(cg_recursion_mixed(4, 0, kHalf), -std::sqrt(4.0 / 5.0), 1e-15);
    EXPECT_NEAR(cg_recursion_mixed(4, 0, -kHalf), 0.0, 1e-15);
    EXPECT_NEAR(cg_recursion_mixed(4, 2, kHalf), -std::sqrt(2.0 / 5.0), 1e-15);
    EXPECT_NEAR(cg_recursion_mixed(4, 2, -kHalf), std::sqrt(2.0 / 5.0), 1e-15);
    EXPECT_NEAR(cg_recursion_mixed(12, 6, kHalf), -std::sqrt(6.0 / 13.0), 1e-15);
    EXPECT_NEAR(cg_recursion_mixed(12, 6, -kHalf), std::sqrt(6.0 / 13.0), 1e-15);
}

TEST(CgTest, ClosedFormsMatchRacahOnFullDomain) {
    for (int N = 1; N <= 13; N++) {
        for (int k = 0; k <= N; k++) {
            for (HalfInt m2 : {kHalf, -kHalf}) {
                HalfInt m1 = h(2 * k - N);
                HalfInt m = m1 + m2;
                EXPECT_NEAR(cg_ohara_symmetric(N, k, m2), cg({h(N), m1, kHalf, m2, h(N + 1), m}), 1e-12);
                double mixed = m.abs() <= h(N - 1) ? cg({h(N), m1, kHalf, m2, h(N - 1), m}) : 0.0;
                EXPECT_NEAR(cg_recursion_mixed(N, k, m2), mixed, 1e-12) << N << " " << k << " " << m2;
            }
        }
    }
}

TEST(CgTest, ClosedFormsRejectBadArguments) {
    EXPECT_THROW(cg_ohara_symmetric(4, 5, kHalf), std::out_of_range);
    EXPECT_THROW(cg_ohara_symmetric(4, -1, kHalf), std::out_of_range);
    EXPECT_THROW(cg_recursion_mixed(4, 5, kHalf), std::out_of_range);
    EXPECT_THROW(cg_recursion_mixed(4, 2, h(3)), std::out_of_range);
}

TEST(CgTest, FactorialAndBinomial) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
    EXPECT_EQ(factorial(-1), 0);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(10, 11), 0);
    EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

}  // namespace
}  // namespace insqec
