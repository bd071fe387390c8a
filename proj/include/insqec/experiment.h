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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "insqec/channel.h"
#include "insqec/states.h"

namespace insqec {

inline constexpr const char *kSchema = "insqec/1";
inline constexpr uint64_t kMaxShots = 100000000;

/// Malformed or inconsistent experiment configuration.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    int g = 2;
    int n = 2;
    int u = 1;
    LogicalQubit payload{1, 0};
    InsertionQubit insertion{0, 1};
    /// Insertion position; empty means drawn from the seed.
    std::optional<int> position;
    uint64_t shots = 100000;
    uint64_t seed = 0;
    std::string mode = "single";
    std::string format = "json";
    /// (g, n, u) cells for lemma and sweep; empty optional means the default
    /// grid.
    std::optional<std::vector<std::array<int, 3>>> grid;

    GnuCode code() const {
        return GnuCode(g, n, u);
    }
};

/// Default (g, n, u) grid for lemma and sweep runs.
std::vector<std::array<int, 3>> default_grid();

/// Reads [re, im] (or a bare real number).
Complex parse_complex(const nlohmann::json &j, const std::string &what);

/// Reads a pair of complex amplitudes. A pair whose squared norm is within
/// 1e-6 of 1 is rescaled and a warning appended; anything further off is a
/// ConfigError.
QubitAmplitudes parse_amplitudes(const nlohmann::json &j, const std::string &what,
                                 std::vector<std::string> &warnings);

/// Applies the keys of a JSON document on top of `base`. Unknown keys are
/// rejected. Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json &doc, std::vector<std::string> &warnings,
                              ExperimentConfig base = {});

/// Validates code parameters and position; throws ConfigError.
void check_config(const ExperimentConfig &cfg);

struct Report {
    nlohmann::json body;
    /// Rows for --format csv; empty when the mode has no table.
    std::string csv;
    /// 0 when every check passed, 2 on a numerical violation.
    int exit_code = 0;
    std::vector<std::string> warnings;
};

/// Wilson score interval at 95%.
std::array<double, 2> wilson_interval(uint64_t successes, uint64_t trials);

/// encode -> insert -> two-stage syndrome -> teleport, with the analytic and
/// oracle distributions side by side.
Report run_single(const ExperimentConfig &cfg);

/// Sampled syndrome frequencies against the analytic distribution. Shot s
/// uses Rng::stream(seed, s); with a random position the shot draws it first.
Report run_montecarlo(const ExperimentConfig &cfg);

/// verify_lemma1 over the grid.
Report run_lemma(const ExperimentConfig &cfg);

/// The four-qubit code worked example: the symmetric-sector displays and the
/// mixed-sector states for every insertion position.
Report run_example();

/// Per-position distributions over the grid: analytic, oracle, zero band and
/// sampled frequencies.
Report run_sweep(const ExperimentConfig &cfg);

Report run(const ExperimentConfig &cfg);

}  // namespace insqec
