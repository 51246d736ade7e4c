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

#include "qecstab/rng.h"

#include <cmath>
#include <limits>
#include <numbers>

namespace qecstab {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RngStream::RngStream(uint64_t seed, uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ull))) {
}

uint64_t RngStream::geometric(double p) {
    if (p <= 0) {
        return std::numeric_limits<uint64_t>::max();
    }
    if (p >= 1) {
        return 0;
    }
    double u = 1.0 - uniform();  // in (0, 1]
    double k = std::floor(std::log(u) / std::log1p(-p));
    if (k >= 1.8e19) {
        return std::numeric_limits<uint64_t>::max();
    }
    return uint64_t(k);
}

double RngStream::normal() {
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace qecstab
