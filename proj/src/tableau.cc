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

#include "qecstab/tableau.h"

#include <stdexcept>

namespace qecstab {

TableauSimulator::TableauSimulator(size_t num_qubits)
    : n_(num_qubits),
      x_(2 * num_qubits + 1, std::vector<uint8_t>(num_qubits, 0)),
      z_(2 * num_qubits + 1, std::vector<uint8_t>(num_qubits, 0)),
      r_(2 * num_qubits + 1, 0) {
    for (size_t i = 0; i < n_; i++) {
        x_[i][i] = 1;
        z_[n_ + i][i] = 1;
    }
}

void TableauSimulator::hadamard(size_t q) {
    for (size_t i = 0; i < 2 * n_; i++) {
        r_[i] ^= x_[i][q] & z_[i][q];
        std::swap(x_[i][q], z_[i][q]);
    }
}

void TableauSimulator::phase(size_t q) {
    for (size_t i = 0; i < 2 * n_; i++) {
        r_[i] ^= x_[i][q] & z_[i][q];
        z_[i][q] ^= x_[i][q];
    }
}

void TableauSimulator::phase_dag(size_t q) {
    for (size_t i = 0; i < 2 * n_; i++) {
        r_[i] ^= x_[i][q] & (z_[i][q] ^ 1);
        z_[i][q] ^= x_[i][q];
    }
}

void TableauSimulator::pauli(size_t q, char p) {
    for (size_t i = 0; i < 2 * n_; i++) {
        if (p == 'X') {
            r_[i] ^= z_[i][q];
        } else if (p == 'Z') {
            r_[i] ^= x_[i][q];
        } else if (p == 'Y') {
            r_[i] ^= x_[i][q] ^ z_[i][q];
        }
    }
}

void TableauSimulator::cnot(size_t a, size_t b) {
    for (size_t i = 0; i < 2 * n_; i++) {
        r_[i] ^= x_[i][a] & z_[i][b] & (x_[i][b] ^ z_[i][a] ^ 1);
        x_[i][b] ^= x_[i][a];
        z_[i][a] ^= z_[i][b];
    }
}

void TableauSimulator::cz(size_t a, size_t b) {
    hadamard(b);
    cnot(a, b);
    hadamard(b);
}

void TableauSimulator::rowcopy(size_t dst, size_t src) {
    x_[dst] = x_[src];
    z_[dst] = z_[src];
    r_[dst] = r_[src];
}

void TableauSimulator::rowsum(size_t h, size_t i) {
    int phase = 2 * r_[h] + 2 * r_[i];
    for (size_t j = 0; j < n_; j++) {
        phase += pauli_product_phase(x_[i][j], z_[i][j], x_[h][j], z_[h][j]);
    }
    phase = ((phase % 4) + 4) % 4;
    r_[h] = phase == 2;
    for (size_t j = 0; j < n_; j++) {
        x_[h][j] ^= x_[i][j];
        z_[h][j] ^= z_[i][j];
    }
}

bool TableauSimulator::measure_z(size_t a, RngStream &rng) {
    size_t p = 2 * n_;
    for (size_t i = n_; i < 2 * n_; i++) {
        if (x_[i][a]) {
            p = i;
            break;
        }
    }
    if (p < 2 * n_) {
        for (size_t i = 0; i < 2 * n_; i++) {
            if (i != p && x_[i][a]) {
                rowsum(i, p);
            }
        }
        rowcopy(p - n_, p);
        std::fill(x_[p].begin(), x_[p].end(), 0);
        std::fill(z_[p].begin(), z_[p].end(), 0);
        z_[p][a] = 1;
        r_[p] = rng.bit();
        return r_[p];
    }
    size_t scratch = 2 * n_;
    std::fill(x_[scratch].begin(), x_[scratch].end(), 0);
    std::fill(z_[scratch].begin(), z_[scratch].end(), 0);
    r_[scratch] = 0;
    for (size_t i = 0; i < n_; i++) {
        if (x_[i][a]) {
            rowsum(scratch, i + n_);
        }
    }
    return r_[scratch];
}

bool TableauSimulator::measure_x(size_t q, RngStream &rng) {
    hadamard(q);
    bool outcome = measure_z(q, rng);
    hadamard(q);
    return outcome;
}

void TableauSimulator::prep_zero(size_t q, RngStream &rng) {
    if (measure_z(q, rng)) {
        pauli(q, 'X');
    }
}

std::vector<bool> TableauSimulator::run(const Circuit &c, RngStream &rng) {
    if (c.num_qubits() > n_) {
        throw std::invalid_argument("TableauSimulator::run: circuit is wider than the simulator");
    }
    std::vector<bool> results(c.num_results());
    for (const auto &g : c.gates()) {
        size_t q = g.qubits[0];
        switch (g.kind) {
            case GateKind::prep_zero:
                prep_zero(q, rng);
                break;
            case GateKind::hadamard:
                hadamard(q);
                break;
            case GateKind::phase:
                phase(q);
                break;
            case GateKind::phase_dag:
                phase_dag(q);
                break;
            case GateKind::pauli_x:
                pauli(q, 'X');
                break;
            case GateKind::pauli_y:
                pauli(q, 'Y');
                break;
            case GateKind::pauli_z:
                pauli(q, 'Z');
                break;
            case GateKind::cnot:
                cnot(q, g.qubits[1]);
                break;
            case GateKind::cz:
                cz(q, g.qubits[1]);
                break;
            case GateKind::measure_z:
                results[g.result] = measure_z(q, rng);
                break;
            case GateKind::measure_x:
                results[g.result] = measure_x(q, rng);
                break;
            case GateKind::classically_controlled_pauli: {
                bool parity = false;
                for (uint32_t k : g.condition) {
                    parity ^= results[k];
                }
                if (parity) {
                    pauli(q, g.pauli);
                }
                break;
            }
        }
    }
    return results;
}

std::vector<SignedPauli> TableauSimulator::stabilizers() const {
    std::vector<SignedPauli> out;
    for (size_t i = n_; i < 2 * n_; i++) {
        SignedPauli p(n_);
        for (size_t j = 0; j < n_; j++) {
            p.pauli.x.set(j, x_[i][j]);
            p.pauli.z.set(j, z_[i][j]);
        }
        p.negative = r_[i];
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace qecstab
