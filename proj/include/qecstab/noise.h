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

#ifndef QECSTAB_NOISE_H
#define QECSTAB_NOISE_H

namespace qecstab {

/// Each gate (preparations included) fails with probability gamma, leaving every qubit it touches
/// with an independent uniform draw from {I, X, Y, Z}. A failed measurement reports a uniform
/// random bit. Every qubit not touched in a time-step draws from the same set with probability
/// epsilon.
struct NoiseParams {
    double gamma = 0;
    double epsilon = 0;

    /// Throws std::invalid_argument unless both lie in [0, 1].
    void validate() const;
    bool noiseless() const {
        return gamma == 0 && epsilon == 0;
    }
};

}  // namespace qecstab

#endif
