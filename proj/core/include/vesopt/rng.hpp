// Copyright 2026 The vesopt Authors. All Rights Reserved.
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
// =============================================================================

#ifndef VESOPT_RNG_HPP
#define VESOPT_RNG_HPP

#include <cstdint>
#include <random>

namespace vesopt {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed of an independent stream identified by (base, stream). Streams are
// derived by hashing, so nested derivation (run -> step -> path) never
// collides in practice and does not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept;

Rng make_rng(std::uint64_t base, std::uint64_t stream);

// Stream tags used by the BO loop.
inline constexpr std::uint64_t kInitStream = 0x1417;
inline constexpr std::uint64_t kRandomAcqStream = 0x4a4d;
inline constexpr std::uint64_t kVesInitStream = 0x7e51;

}  // namespace vesopt

#endif  // VESOPT_RNG_HPP
