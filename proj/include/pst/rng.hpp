// Copyright 2026 The pst authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace pst {

/** SplitMix64 finalizer; the building block of all seed derivation. */
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/**
 * Derive an independent stream seed from a root seed and a list of
 * coordinate fields. Each field is folded through SplitMix64, so any
 * change in any coordinate yields an unrelated stream.
 */
inline std::uint64_t mix_seed(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> fields) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t f : fields) h = splitmix64(h ^ f);
  return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64{seed};
}

/** Uniform double in [0, 1) from 53 random bits. */
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/** Uniform index in [0, n) without modulo bias (Lemire's multiply-shift). */
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<__uint128_t>(rng()) * static_cast<__uint128_t>(n)) >> 64);
}

}  // namespace pst
