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

#include <cstdint>
#include <random>

namespace insqec {

/// SplitMix64 finalizer. Used to derive independent generator seeds.
uint64_t splitmix64(uint64_t x);

/// Seed for stream `index` derived from `master`:
///   splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15).
uint64_t split_seed(uint64_t master, uint64_t index);

/// Seeded generator with a platform-independent uniform draw.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    /// Stream `index` of the master seed; see split_seed.
    static Rng stream(uint64_t master, uint64_t index) {
        return Rng(split_seed(master, index));
    }

    /// Uniform double in [0, 1) built from the top 53 bits of one draw.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    uint64_t next() {
        return engine_();
    }

   private:
    std::mt19937_64 engine_;
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline uint64_t split_seed(uint64_t master, uint64_t index) {
    return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

}  // namespace insqec
