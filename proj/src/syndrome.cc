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

#include <functional>
#include <stdexcept>
#include <vector>

namespace insqec {

nlohmann::json Syndrome::to_json() const {
    return {
        {"twice_j", key.j.twice()},
        {"j", key.j.str()},
        {"w", key.w},
        {"probability_j", probability_j},
        {"probability_w", probability_w},
        {"probability", probability()},
    };
}

SyndromeExtraction extract_syndrome(const DenseState &state, int g, Rng &rng) {
    if (g < 2) {
        throw std::invalid_argument("code gap g must satisfy g >= 2");
    }
    std::vector<HalfInt> ladder = allowed_total_j(state.num_qubits);
    MeasurementRecord first = born_sample(state, total_j_projectors(state.num_qubits), rng);
    HalfInt j = ladder[first.outcome];
    MeasurementRecord second = born_sample(first.post_state, w_projectors(j, g), rng);
    SyndromeExtraction out;
    out.syndrome.key = {j, static_cast<int>(second.outcome)};
    out.syndrome.probability_j = first.probability;
    out.syndrome.probability_w = second.probability;
    out.post_state = second.post_state;
    return out;
}

SyndromeExtraction extract_syndrome(const DenseState &state, int g, uint64_t seed) {
    Rng rng(seed);
    return extract_syndrome(state, g, rng);
}

std::map<SyndromeKey, double> oracle_syndrome_distribution(const DenseState &state, int g) {
    if (g < 2) {
        throw std::invalid_argument("code gap g must satisfy g >= 2");
    }
    double total = state.norm_squared();
    std::map<SyndromeKey, double> out;
    for (HalfInt j : allowed_total_j(state.num_qubits)) {
        DenseState sector = apply_total_j_projector(state, j);
        for (int w = 0; w < g; w++) {
            out[{j, w}] = apply_w_projector(sector, j, g, w).norm_squared() / total;
        }
    }
    return out;
}

std::map<SyndromeKey, double> support(const std::map<SyndromeKey, double> &dist, double cutoff) {
    std::map<SyndromeKey, double> out;
    for (const auto &[key, p] : dist) {
        if (p > cutoff) {
            out[key] = p;
        }
    }
    return out;
}

Syndrome sample_syndrome(const std::map<SyndromeKey, double> &dist, Rng &rng) {
    if (dist.empty()) {
        throw std::invalid_argument("empty syndrome distribution");
    }
    // j ladder in descending order, matching total_j_projectors.
    std::map<HalfInt, std::vector<std::pair<int, double>>, std::greater<>> by_j;
    for (const auto &[key, p] : dist) {
        by_j[key.j].push_back({key.w, p});
    }
    std::vector<HalfInt> js;
    std::vector<double> pj;
    for (const auto &[j, row] : by_j) {
        double s = 0;
        for (const auto &[w, p] : row) {
            s += p;
        }
        js.push_back(j);
        pj.push_back(s);
    }
    std::size_t jk = sample_index(pj, rng);
    const auto &row = by_j[js[jk]];
    std::vector<double> pw;
    for (const auto &[w, p] : row) {
        pw.push_back(p);
    }
    std::size_t wk = sample_index(pw, rng);
    double total = 0;
    for (double p : pj) {
        total += p;
    }
    Syndrome s;
    s.key = {js[jk], row[wk].first};
    s.probability_j = pj[jk] / total;
    s.probability_w = pj[jk] > 0 ? row[wk].second / pj[jk] : 0;
    return s;
}

}  // namespace insqec
