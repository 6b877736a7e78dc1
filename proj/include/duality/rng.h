// Copyright 2026 The Duality Authors
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

#ifndef DUALITY_RNG_H
#define DUALITY_RNG_H

#include <array>
#include <cstdint>

namespace duality {

/// xoshiro256** (Blackman & Vigna), state seeded through splitmix64.
///
/// Used instead of the <random> engines/distributions because the standard
/// leaves distribution algorithms implementation-defined, which would break
/// golden values across standard libraries.
class Xoshiro256 {
   public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on (0, 1], safe for log().
    double uniform_open_zero();
    /// Standard normal via Box-Muller; caches the second variate.
    double normal();

   private:
    std::array<std::uint64_t, 4> s_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t &state);

}  // namespace duality

#endif
