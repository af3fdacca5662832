/*
   Copyright 2026 The gri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GRI_SAMPLING_HPP
#define GRI_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "gri/scalars.hpp"

namespace gri {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;
inline constexpr int kDefaultBox = 9;

/// SplitMix64 finalizer; used to derive independent per-index streams so that
/// sample k depends only on (seed, k) and never on scheduling.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Rng stream(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(seed ^ splitmix64(index + 1))); }

/// Uniform integer in [-box, box] for Q, uniform residue for F_p.
inline Scalar random_scalar(const Field& field, Rng& rng, int box = kDefaultBox) {
    if (field.is_finite()) {
        std::uniform_int_distribution<std::int64_t> dist(0, field.characteristic() - 1);
        return field.from_int(dist(rng));
    }
    std::uniform_int_distribution<std::int64_t> dist(-box, box);
    return field.from_int(dist(rng));
}

}  // namespace gri

#endif
