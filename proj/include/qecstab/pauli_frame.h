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

#ifndef QECSTAB_PAULI_FRAME_H
#define QECSTAB_PAULI_FRAME_H

#include <cstdint>
#include <vector>

#include "qecstab/circuit.h"
#include "qecstab/noise.h"
#include "qecstab/rng.h"

namespace qecstab {

/// Pauli-frame Monte Carlo engine with the gamma/epsilon noise model.
///
/// The frame holds the accumulated error relative to a noiseless reference run. By default results
/// are reported as flips relative to that reference, which is all the protocol needs: every parity
/// it evaluates is deterministic in the reference run. `run_sampled` instead combines the flips
/// with a given reference sample and randomizes the unobservable frame components after
/// preparations and measurements, which yields true outcome samples.
class FrameSimulator {
   public:
    FrameSimulator(size_t num_qubits, NoiseParams noise, RngStream rng);

    size_t num_qubits() const {
        return frame_.size();
    }
    const NoiseParams &noise() const {
        return noise_;
    }
    RngStream &rng() {
        return rng_;
    }

    /// Runs every gate of `c` (qubit q of c is qubit q here). Idle noise covers all qubits of the
    /// simulator, not just those of c.
    void run(const Circuit &c);
    /// Runs `c` with outcome = reference ^ flip. Call randomize_gauge() first on a fresh simulator.
    void run_sampled(const Circuit &c, const std::vector<bool> &reference);
    /// Random Z component on every qubit; valid for the all-|0> start.
    void randomize_gauge();

    /// Results of the last run: flips (run) or outcomes (run_sampled), indexed by result.
    const std::vector<uint8_t> &results() const {
        return results_;
    }

    PauliOperator frame(size_t offset, size_t n) const;
    /// Multiplies the Pauli into the frame on qubits offset.. (a noiseless operation).
    void apply(const PauliOperator &p, size_t offset);
    void clear_frame();

    /// Time-steps run so far.
    uint64_t steps() const {
        return steps_;
    }

   private:
    // bit 0: X component, bit 1: Z component.
    std::vector<uint8_t> frame_;
    std::vector<uint8_t> results_;
    NoiseParams noise_;
    RngStream rng_;
    uint64_t idle_skip_;
    uint64_t steps_ = 0;
    bool sampled_ = false;
    const std::vector<bool> *reference_ = nullptr;

    void step(const Gate &g);
    void idle(const Gate &g);
    void run_impl(const Circuit &c);
};

struct FrameRun {
    PauliOperator frame;
    std::vector<bool> flips;
};

/// One shot of `c` from an error-free start with `injected` on the lowest qubits.
FrameRun run_pauli_frame(const Circuit &c, const NoiseParams &noise, RngStream &rng, const PauliOperator &injected = PauliOperator());

}  // namespace qecstab

#endif
