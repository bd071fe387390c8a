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

#include <map>

#include "insqec/analytic.h"
#include "insqec/oracle.h"
#include "insqec/rng.h"
#include "insqec/states.h"

namespace insqec {

/// Measured (j, w) with the probability of each stage. probability_w is
/// conditional on the j outcome.
struct Syndrome {
    SyndromeKey key;
    double probability_j = 0;
    double probability_w = 0;

    double probability() const {
        return probability_j * probability_w;
    }
    nlohmann::json to_json() const;
};

struct SyndromeExtraction {
    Syndrome syndrome;
    DenseState post_state;  // normalized
};

/// Two-stage measurement on a dense state: J^2 over the full ladder of
/// allowed j, then j + m mod g on the collapsed state. Uses two uniform draws.
SyndromeExtraction extract_syndrome(const DenseState &state, int g, Rng &rng);
SyndromeExtraction extract_syndrome(const DenseState &state, int g, uint64_t seed);

/// Joint probabilities P(j) P(w | j) for every allowed j and every w in
/// 0..g-1, zeros included.
std::map<SyndromeKey, double> oracle_syndrome_distribution(const DenseState &state, int g);

/// Entries of `dist` with probability above `cutoff`.
std::map<SyndromeKey, double> support(const std::map<SyndromeKey, double> &dist, double cutoff = 1e-12);

/// Draw a syndrome from a precomputed joint distribution the same way
/// extract_syndrome does: one uniform for j, one for w given j.
Syndrome sample_syndrome(const std::map<SyndromeKey, double> &dist, Rng &rng);

}  // namespace insqec
