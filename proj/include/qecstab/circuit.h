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

#ifndef QECSTAB_CIRCUIT_H
#define QECSTAB_CIRCUIT_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qecstab/pauli.h"

namespace qecstab {

enum class GateKind : uint8_t {
    prep_zero,
    hadamard,
    phase,      // S
    phase_dag,  // S^dagger
    pauli_x,
    pauli_y,
    pauli_z,
    cnot,
    cz,
    measure_z,
    measure_x,
    classically_controlled_pauli,
};

std::string_view gate_name(GateKind kind);
bool is_measurement(GateKind kind);
bool is_unitary(GateKind kind);

struct Gate {
    GateKind kind;
    /// One qubit, or (control, target) for cnot.
    std::vector<uint32_t> qubits;
    /// Measurements: index into the circuit's result record.
    int32_t result = -1;
    /// Classically controlled Pauli: applied iff the XOR of these results is 1.
    std::vector<uint32_t> condition;
    char pauli = 'I';
};

struct Register {
    std::string name;
    uint32_t start = 0;
    uint32_t size = 0;

    uint32_t operator[](size_t k) const {
        return start + uint32_t(k);
    }
};

/// Ordered gate schedule over named qubit registers. Gate i runs at time-step i.
class Circuit {
   public:
    Circuit() = default;

    /// Appends `size` fresh qubits under `name` and returns the register.
    const Register &add_register(std::string name, size_t size);
    const Register &reg(std::string_view name) const;
    bool has_register(std::string_view name) const;
    const std::vector<Register> &registers() const {
        return registers_;
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }
    size_t num_results() const {
        return result_labels_.size();
    }
    const std::string &result_label(size_t index) const {
        return result_labels_[index];
    }
    /// Index of the result with this label; throws if absent.
    uint32_t result_index(std::string_view label) const;

    void prep_zero(uint32_t q);
    void hadamard(uint32_t q);
    void phase(uint32_t q);
    void phase_dag(uint32_t q);
    /// 'X', 'Y' or 'Z'; 'I' is ignored.
    void pauli(uint32_t q, char p);
    void cnot(uint32_t control, uint32_t target);
    void cz(uint32_t a, uint32_t b);
    uint32_t measure_z(uint32_t q, std::string label);
    uint32_t measure_x(uint32_t q, std::string label);
    void classically_controlled_pauli(uint32_t q, char p, std::vector<uint32_t> condition);

    /// Appends every gate of `other`, which must act on a width no larger than this circuit.
    /// Results are renumbered after the existing ones and their labels prefixed with `label_prefix`.
    /// Returns the offset added to `other`'s result indices.
    uint32_t append(const Circuit &other, std::string_view label_prefix = "");
    /// Same, with other's qubit q mapped to qubit_map[q].
    uint32_t append_mapped(const Circuit &other, const std::vector<uint32_t> &qubit_map, std::string_view label_prefix = "");

    /// Reversed schedule of inverse gates. Throws if the circuit is not unitary.
    Circuit inverse() const;

    size_t count(GateKind kind) const;
    /// Two-qubit gates with one qubit in each of the two registers.
    size_t count_couplings(const Register &a, const Register &b) const;

    /// One line per gate: "t=<step> <kind> <qubits> [label]".
    std::string to_text() const;

    /// Greedy as-soon-as-possible grouping into layers of gates on disjoint qubits. Measurement
    /// conditions are respected. Only informational; simulations use the serial schedule.
    std::vector<std::vector<size_t>> parallel_layers() const;

   private:
    size_t num_qubits_ = 0;
    std::vector<Register> registers_;
    std::vector<Gate> gates_;
    std::vector<std::string> result_labels_;

    void check_qubit(uint32_t q) const;
    void push(Gate g);
};

/// Heisenberg conjugation P -> G P G^dagger by a unitary gate, with sign tracking.
void conjugate_by_gate(SignedPauli &p, const Gate &gate);

/// Unitary circuit on `num_qubits` qubits mapping |0...0> to the unique state stabilized by the
/// given independent, commuting signed Paulis (there must be exactly num_qubits of them).
/// Uses H, S, S^dagger, CNOT, CZ and Pauli gates. Throws std::invalid_argument otherwise.
Circuit synth_stabilizer_state(const std::vector<SignedPauli> &generators);

}  // namespace qecstab

#endif
