// Copyright 2026 The qecstab Authors
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

#ifndef QECSTAB_RNG_H
#define QECSTAB_RNG_H

#include <cstdint>
#include <random>

namespace qecstab {

uint64_t splitmix64(uint64_t x);

/// Deterministic random stream identified by (seed, stream index).
///
/// Draws are built directly on the engine output rather than std distributions so that sequences
/// are identical across standard libraries.
class RngStream {
   public:
    RngStream(uint64_t seed, uint64_t stream);

    uint64_t seed() const {
        return seed_;
    }
    uint64_t stream() const {
        return stream_;
    }

    uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 bits.
    double uniform() {
        return double(engine_() >> 11) * 0x1.0p-53;
    }
    bool bernoulli(double p) {
        return p > 0 && (p >= 1 || uniform() < p);
    }
    bool bit() {
        return engine_() >> 63;
    }
    /// Uniform in {0, 1, 2, 3}.
    uint8_t two_bits() {
        return uint8_t(engine_() >> 62);
    }
    /// Number of failures before the first success of a Bernoulli(p) sequence. Huge when p = 0.
    uint64_t geometric(double p);
    /// Standard normal by Box-Muller.
    double normal();

   private:
    uint64_t seed_;
    uint64_t stream_;
    std::mt19937_64 engine_;
};

}  // namespace qecstab

#endif
