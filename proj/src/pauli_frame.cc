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

#include "qecstab/pauli_frame.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qecstab {

void NoiseParams::validate() const {
    if (!(gamma >= 0 && gamma <= 1) || !(epsilon >= 0 && epsilon <= 1)) {
        throw std::invalid_argument("noise probabilities must lie in [0, 1]");
    }
}

FrameSimulator::FrameSimulator(size_t num_qubits, NoiseParams noise, RngStream rng)
    : frame_(num_qubits, 0), noise_(noise), rng_(std::move(rng)) {
    noise_.validate();
    idle_skip_ = rng_.geometric(noise_.epsilon);
}

void FrameSimulator::randomize_gauge() {
    for (auto &f : frame_) {
        f = uint8_t((f & 1) | (rng_.bit() << 1));
    }
}

void FrameSimulator::run(const Circuit &c) {
    sampled_ = false;
    reference_ = nullptr;
    run_impl(c);
}

void FrameSimulator::run_sampled(const Circuit &c, const std::vector<bool> &reference) {
    if (reference.size() != c.num_results()) {
        throw std::invalid_argument("run_sampled: reference sample has the wrong length");
    }
    sampled_ = true;
    reference_ = &reference;
    run_impl(c);
    reference_ = nullptr;
}

void FrameSimulator::run_impl(const Circuit &c) {
    if (c.num_qubits() > frame_.size()) {
        throw std::invalid_argument("FrameSimulator: circuit is wider than the simulator");
    }
    results_.assign(c.num_results(), 0);
    for (const auto &g : c.gates()) {
        step(g);
    }
}

void FrameSimulator::step(const Gate &g) {
    uint32_t a = g.qubits[0];
    bool faulty = rng_.bernoulli(noise_.gamma);
    switch (g.kind) {
        case GateKind::prep_zero:
            frame_[a] = sampled_ ? uint8_t(rng_.bit() << 1) : 0;
            break;
        case GateKind::hadamard: {
            uint8_t f = frame_[a];
            frame_[a] = uint8_t(((f & 1) << 1) | ((f >> 1) & 1));
            break;
        }
        case GateKind::phase:
        case GateKind::phase_dag:
            frame_[a] ^= uint8_t((frame_[a] & 1) << 1);
            break;
        case GateKind::pauli_x:
        case GateKind::pauli_y:
        case GateKind::pauli_z:
            break;
        case GateKind::cnot: {
            uint32_t b = g.qubits[1];
            frame_[b] ^= frame_[a] & 1;
            frame_[a] ^= frame_[b] & 2;
            break;
        }
        case GateKind::cz: {
            uint32_t b = g.qubits[1];
            uint8_t xa = frame_[a] & 1;
            uint8_t xb = frame_[b] & 1;
            frame_[a] ^= uint8_t(xb << 1);
            frame_[b] ^= uint8_t(xa << 1);
            break;
        }
        case GateKind::measure_z:
        case GateKind::measure_x: {
            bool z_basis = g.kind == GateKind::measure_z;
            uint8_t flip = z_basis ? (frame_[a] & 1) : ((frame_[a] >> 1) & 1);
            uint8_t value = sampled_ ? uint8_t(flip ^ (*reference_)[g.result]) : flip;
            if (faulty) {
                value = rng_.bit();
            }
            results_[g.result] = value;
            if (sampled_) {
                // The measured observable is now a stabilizer; its conjugate component is gauge.
                if (z_basis) {
                    frame_[a] = uint8_t((frame_[a] & 1) | (rng_.bit() << 1));
                } else {
                    frame_[a] = uint8_t((frame_[a] & 2) | rng_.bit());
                }
            }
            faulty = false;
            break;
        }
        case GateKind::classically_controlled_pauli: {
            uint8_t parity = 0;
            for (uint32_t k : g.condition) {
                parity ^= results_[k];
                if (sampled_) {
                    parity ^= uint8_t((*reference_)[k]);
                }
            }
            if (parity) {
                uint8_t bits = g.pauli == 'X' ? 1 : g.pauli == 'Z' ? 2 : 3;
                frame_[a] ^= bits;
            }
            break;
        }
    }
    if (faulty) {
        for (uint32_t q : g.qubits) {
            frame_[q] ^= rng_.two_bits();
        }
    }
    idle(g);
    steps_++;
}

void FrameSimulator::idle(const Gate &g) {
    uint64_t remaining = frame_.size() - g.qubits.size();
    uint64_t base = 0;
    while (idle_skip_ < remaining) {
        uint64_t index = base + idle_skip_;
        // The index-th qubit not touched by the gate.
        uint64_t q = index;
        uint32_t lo = g.qubits[0];
        uint32_t hi = g.qubits.size() > 1 ? g.qubits[1] : lo;
        if (lo > hi) {
            std::swap(lo, hi);
        }
        if (q >= lo) {
            q++;
        }
        if (g.qubits.size() > 1 && q >= hi) {
            q++;
        }
        frame_[q] ^= rng_.two_bits();
        base = index + 1;
        remaining -= idle_skip_ + 1;
        idle_skip_ = rng_.geometric(noise_.epsilon);
    }
    if (idle_skip_ != std::numeric_limits<uint64_t>::max()) {
        idle_skip_ -= remaining;
    }
}

PauliOperator FrameSimulator::frame(size_t offset, size_t n) const {
    PauliOperator p(n);
    for (size_t j = 0; j < n; j++) {
        p.x.set(j, frame_[offset + j] & 1);
        p.z.set(j, frame_[offset + j] & 2);
    }
    return p;
}

void FrameSimulator::apply(const PauliOperator &p, size_t offset) {
    if (offset + p.num_qubits() > frame_.size()) {
        throw std::invalid_argument("FrameSimulator::apply: operator exceeds the simulator width");
    }
    for (size_t j = 0; j < p.num_qubits(); j++) {
        frame_[offset + j] ^= uint8_t(p.x[j] | (p.z[j] << 1));
    }
}

void FrameSimulator::clear_frame() {
    std::fill(frame_.begin(), frame_.end(), 0);
}

FrameRun run_pauli_frame(const Circuit &c, const NoiseParams &noise, RngStream &rng, const PauliOperator &injected) {
    FrameSimulator sim(c.num_qubits(), noise, rng);
    if (injected.num_qubits() > 0) {
        sim.apply(injected, 0);
    }
    sim.run(c);
    rng = sim.rng();
    FrameRun out{sim.frame(0, c.num_qubits()), {}};
    for (uint8_t r : sim.results()) {
        out.flips.push_back(r);
    }
    return out;
}

}  // namespace qecstab
