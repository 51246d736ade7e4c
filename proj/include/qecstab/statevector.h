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

#ifndef QECSTAB_STATEVECTOR_H
#define QECSTAB_STATEVECTOR_H

#include <complex>
#include <vector>

#include "qecstab/circuit.h"
#include "qecstab/codes.h"
#include "qecstab/noise.h"
#include "qecstab/rng.h"

namespace qecstab {

constexpr size_t kMaxStatevectorQubits = 20;

/// Dense state of up to 20 qubits. Basis index bit q is the value of qubit q.
class StateVector {
   public:
    /// |0...0>. Throws std::invalid_argument above kMaxStatevectorQubits.
    explicit StateVector(size_t num_qubits);
    static StateVector from_amplitudes(std::vector<std::complex<double>> amplitudes);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return amps_;
    }
    std::complex<double> amplitude(size_t index) const {
        return amps_[index];
    }

    void hadamard(size_t q);
    void phase(size_t q);
    void phase_dag(size_t q);
    void pauli(size_t q, char p);
    void cnot(size_t control, size_t target);
    void cz(size_t a, size_t b);
    /// Projective measurement; the branch is drawn from `rng`.
    bool measure_z(size_t q, RngStream &rng);
    bool measure_x(size_t q, RngStream &rng);
    void prep_zero(size_t q, RngStream &rng);

    /// Applies p to qubits offset .. offset + p.num_qubits() - 1.
    void apply_pauli(const PauliOperator &p, size_t offset = 0);
    /// <psi| P |psi> for a signed Hermitian Pauli on qubits offset.. .
    double expectation(const SignedPauli &p, size_t offset = 0) const;
    double norm() const;
    std::complex<double> inner(const StateVector &other) const;
    void normalize();

    /// This state on the low qubits, |0...0> on `extra` new high qubits.
    StateVector extended(size_t extra) const;

   private:
    size_t num_qubits_;
    std::vector<std::complex<double>> amps_;
};

struct StatevectorRun {
    StateVector state;
    std::vector<bool> results;
};

/// Runs the circuit on `input` (padded with |0> qubits up to the circuit width) after applying
/// `injected` to the lowest qubits.
StatevectorRun run_statevector(const Circuit &c, const StateVector &input, const PauliOperator &injected, RngStream &rng);

/// Same gate-by-gate noise placement as the Pauli-frame engine, sampled explicitly and applied as
/// operators.
StatevectorRun run_statevector_noisy(const Circuit &c, const StateVector &input, const NoiseParams &noise, RngStream &rng);

/// Haar-like random code state: a Gaussian random vector projected onto the code space.
StateVector random_encoded_state(const StabilizerCode &code, RngStream &rng);

/// Sum over ancilla basis states a of |<phi, a|psi>|^2, with phi on the low qubits of psi.
double data_fidelity(const StateVector &phi, const StateVector &psi);

}  // namespace qecstab

#endif
