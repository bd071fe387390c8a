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

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "insqec/half_int.h"
#include "insqec/rng.h"
#include "insqec/states.h"

namespace insqec {

// Brute-force reference layer. Everything here works directly on 2^M
// amplitude vectors and knows nothing about codes or coupling paths.
//
// Spin convention: bit value 1 is spin up, and the magnetic number of a
// weight-k basis state is m = k - M/2. The single-spin operators are
//   Sx = X/2,  Sy = -Y/2,  Sz = -Z/2,
// i.e. a rotation by pi about x of the textbook (X, Y, Z)/2 triple, so the
// su(2) commutators keep their usual signs and J+ = sum_l |1><0|_l.

/// Largest M for which full 2^M x 2^M matrices are built.
inline constexpr int kMaxDenseOperatorQubits = 10;

struct DenseOperator {
    int num_qubits = 0;
    Eigen::MatrixXcd matrix;

    bool is_hermitian(double tol = 1e-12) const;
    DenseState apply(const DenseState &state) const;
};

DenseState apply_jx(const DenseState &state);
DenseState apply_jy(const DenseState &state);
DenseState apply_jz(const DenseState &state);
DenseState apply_j_plus(const DenseState &state);
DenseState apply_j_minus(const DenseState &state);
/// (Jx)^2 + (Jy)^2 + (Jz)^2 applied term by term.
DenseState apply_j_squared(const DenseState &state);

DenseOperator j_x(int M);
DenseOperator j_y(int M);
DenseOperator j_z(int M);
DenseOperator j_squared(int M);

/// M/2, M/2 - 1, ..., down to 0 or 1/2.
std::vector<HalfInt> allowed_total_j(int M);
bool is_allowed_total_j(int M, HalfInt j);

/// prod_{j' != j} (J^2 - j'(j'+1)) / (j(j+1) - j'(j'+1)) over allowed_total_j.
DenseState apply_total_j_projector(const DenseState &state, HalfInt j);
DenseOperator total_j_projector(int M, HalfInt j);

/// Result of projecting a state. `state` is normalized unless `zero_branch`,
/// in which case it is the zero vector.
struct Projection {
    double probability = 0;
    DenseState state;
    bool zero_branch = true;
};

/// Branches with probability below this are reported as zero states.
inline constexpr double kZeroBranchCutoff = 1e-14;

Projection project_total_j(const DenseState &state, HalfInt j);

/// j + m mod g for a weight-k basis state read inside the total-j sector.
int w_class(int M, HalfInt j, int k, int g);

/// Diagonal projector onto weights with j + m = w (mod g).
DenseState apply_w_projector(const DenseState &state, HalfInt j, int g, int w);

/// Projects a state that already lies in the total-j sector (residual
/// ||(J^2 - j(j+1)) psi|| <= 1e-9 ||psi||) onto j + m = w (mod g). Throws
/// LeakageError if the state is outside the sector and std::out_of_range for
/// w outside 0..g-1.
Projection project_w_mod_g(const DenseState &state, HalfInt j, int g, int w);

/// ||(J^2 - j(j+1)) psi||.
double sector_residual(const DenseState &state, HalfInt j);

struct Projector {
    std::string label;
    std::function<DenseState(const DenseState &)> apply;
};
using ProjectorSet = std::vector<Projector>;

ProjectorSet total_j_projectors(int M);
ProjectorSet w_projectors(HalfInt j, int g);

struct MeasurementRecord {
    std::string label;
    std::size_t outcome = 0;
    double probability = 0;
    DenseState post_state;
};

/// Born probabilities for each projector. Throws std::invalid_argument when
/// the projected pieces do not sum back to the state within 1e-10.
std::vector<double> born_probabilities(const DenseState &state, const ProjectorSet &projectors);

/// Sample one outcome with a single uniform draw from `rng`.
MeasurementRecord born_sample(const DenseState &state, const ProjectorSet &projectors, Rng &rng);
MeasurementRecord born_sample(const DenseState &state, const ProjectorSet &projectors, uint64_t seed);

/// Index drawn from a discrete distribution by inverse CDF with one uniform.
std::size_t sample_index(const std::vector<double> &probabilities, Rng &rng);

}  // namespace insqec
