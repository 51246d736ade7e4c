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

#include "qecstab/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qecstab/gf2.h"

namespace qecstab {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::prep_zero:
            return "prep_zero";
        case GateKind::hadamard:
            return "hadamard";
        case GateKind::phase:
            return "phase";
        case GateKind::phase_dag:
            return "phase_dag";
        case GateKind::pauli_x:
            return "pauli_x";
        case GateKind::pauli_y:
            return "pauli_y";
        case GateKind::pauli_z:
            return "pauli_z";
        case GateKind::cnot:
            return "cnot";
        case GateKind::cz:
            return "cz";
        case GateKind::measure_z:
            return "measure_z";
        case GateKind::measure_x:
            return "measure_x";
        case GateKind::classically_controlled_pauli:
            return "classically_controlled_pauli";
    }
    return "?";
}

bool is_measurement(GateKind kind) {
    return kind == GateKind::measure_z || kind == GateKind::measure_x;
}

bool is_unitary(GateKind kind) {
    return !is_measurement(kind) && kind != GateKind::prep_zero && kind != GateKind::classically_controlled_pauli;
}

namespace {

Gate make_gate(GateKind kind, std::vector<uint32_t> qubits, int32_t result = -1) {
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.result = result;
    return g;
}

}  // namespace

const Register &Circuit::add_register(std::string name, size_t size) {
    if (has_register(name)) {
        throw std::invalid_argument("duplicate register name '" + name + "'");
    }
    registers_.push_back(Register{std::move(name), uint32_t(num_qubits_), uint32_t(size)});
    num_qubits_ += size;
    return registers_.back();
}

const Register &Circuit::reg(std::string_view name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::invalid_argument("no register named '" + std::string(name) + "'");
}

bool Circuit::has_register(std::string_view name) const {
    return std::any_of(registers_.begin(), registers_.end(), [&](const Register &r) {
        return r.name == name;
    });
}

uint32_t Circuit::result_index(std::string_view label) const {
    for (size_t k = 0; k < result_labels_.size(); k++) {
        if (result_labels_[k] == label) {
            return uint32_t(k);
        }
    }
    throw std::invalid_argument("no measurement labelled '" + std::string(label) + "'");
}

void Circuit::check_qubit(uint32_t q) const {
    if (q >= num_qubits_) {
        std::stringstream ss;
        ss << "qubit " << q << " is outside the circuit width " << num_qubits_;
        throw std::invalid_argument(ss.str());
    }
}

void Circuit::push(Gate g) {
    for (size_t k = 0; k < g.qubits.size(); k++) {
        check_qubit(g.qubits[k]);
        for (size_t j = 0; j < k; j++) {
            if (g.qubits[j] == g.qubits[k]) {
                throw std::invalid_argument(std::string(gate_name(g.kind)) + " acts twice on the same qubit");
            }
        }
    }
    for (uint32_t c : g.condition) {
        if (c >= result_labels_.size()) {
            throw std::invalid_argument("classically controlled gate refers to a result not yet measured");
        }
    }
    gates_.push_back(std::move(g));
}

void Circuit::prep_zero(uint32_t q) {
    push(make_gate(GateKind::prep_zero, {q}));
}

void Circuit::hadamard(uint32_t q) {
    push(make_gate(GateKind::hadamard, {q}));
}

void Circuit::phase(uint32_t q) {
    push(make_gate(GateKind::phase, {q}));
}

void Circuit::phase_dag(uint32_t q) {
    push(make_gate(GateKind::phase_dag, {q}));
}

void Circuit::pauli(uint32_t q, char p) {
    switch (p) {
        case 'I':
            return;
        case 'X':
            push(make_gate(GateKind::pauli_x, {q}));
            return;
        case 'Y':
            push(make_gate(GateKind::pauli_y, {q}));
            return;
        case 'Z':
            push(make_gate(GateKind::pauli_z, {q}));
            return;
        default:
            throw std::invalid_argument(std::string("unknown Pauli '") + p + "'");
    }
}

void Circuit::cnot(uint32_t control, uint32_t target) {
    push(make_gate(GateKind::cnot, {control, target}));
}

void Circuit::cz(uint32_t a, uint32_t b) {
    push(make_gate(GateKind::cz, {a, b}));
}

uint32_t Circuit::measure_z(uint32_t q, std::string label) {
    uint32_t index = uint32_t(result_labels_.size());
    push(make_gate(GateKind::measure_z, {q}, int32_t(index)));
    result_labels_.push_back(std::move(label));
    return index;
}

uint32_t Circuit::measure_x(uint32_t q, std::string label) {
    uint32_t index = uint32_t(result_labels_.size());
    push(make_gate(GateKind::measure_x, {q}, int32_t(index)));
    result_labels_.push_back(std::move(label));
    return index;
}

void Circuit::classically_controlled_pauli(uint32_t q, char p, std::vector<uint32_t> condition) {
    if (p != 'X' && p != 'Y' && p != 'Z') {
        throw std::invalid_argument(std::string("unknown Pauli '") + p + "'");
    }
    Gate g = make_gate(GateKind::classically_controlled_pauli, {q});
    g.condition = std::move(condition);
    g.pauli = p;
    push(std::move(g));
}

uint32_t Circuit::append(const Circuit &other, std::string_view label_prefix) {
    std::vector<uint32_t> identity(other.num_qubits());
    for (size_t q = 0; q < identity.size(); q++) {
        identity[q] = uint32_t(q);
    }
    return append_mapped(other, identity, label_prefix);
}

uint32_t Circuit::append_mapped(const Circuit &other, const std::vector<uint32_t> &qubit_map, std::string_view label_prefix) {
    if (qubit_map.size() < other.num_qubits()) {
        throw std::invalid_argument("qubit map is shorter than the appended circuit's width");
    }
    uint32_t offset = uint32_t(result_labels_.size());
    for (const auto &label : other.result_labels_) {
        result_labels_.push_back(std::string(label_prefix) + label);
    }
    for (Gate g : other.gates_) {
        for (auto &q : g.qubits) {
            q = qubit_map[q];
        }
        if (g.result >= 0) {
            g.result += int32_t(offset);
        }
        for (auto &c : g.condition) {
            c += offset;
        }
        push(std::move(g));
    }
    return offset;
}

Circuit Circuit::inverse() const {
    Circuit result;
    result.num_qubits_ = num_qubits_;
    result.registers_ = registers_;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        if (!is_unitary(it->kind)) {
            throw std::invalid_argument("inverse: circuit contains the non-unitary gate " + std::string(gate_name(it->kind)));
        }
        Gate g = *it;
        if (g.kind == GateKind::phase) {
            g.kind = GateKind::phase_dag;
        } else if (g.kind == GateKind::phase_dag) {
            g.kind = GateKind::phase;
        }
        result.gates_.push_back(std::move(g));
    }
    return result;
}

size_t Circuit::count(GateKind kind) const {
    return std::count_if(gates_.begin(), gates_.end(), [&](const Gate &g) {
        return g.kind == kind;
    });
}

size_t Circuit::count_couplings(const Register &a, const Register &b) const {
    auto in = [](const Register &r, uint32_t q) {
        return q >= r.start && q < r.start + r.size;
    };
    size_t total = 0;
    for (const auto &g : gates_) {
        if (g.qubits.size() == 2) {
            bool ab = in(a, g.qubits[0]) && in(b, g.qubits[1]);
            bool ba = in(b, g.qubits[0]) && in(a, g.qubits[1]);
            total += ab || ba;
        }
    }
    return total;
}

std::string Circuit::to_text() const {
    std::stringstream ss;
    for (size_t t = 0; t < gates_.size(); t++) {
        const Gate &g = gates_[t];
        ss << "t=" << t << " " << gate_name(g.kind);
        for (uint32_t q : g.qubits) {
            ss << " " << q;
        }
        if (g.result >= 0) {
            ss << " " << result_labels_[g.result];
        }
        if (g.kind == GateKind::classically_controlled_pauli) {
            ss << " " << g.pauli << "^";
            for (size_t k = 0; k < g.condition.size(); k++) {
                ss << (k ? "+" : "") << result_labels_[g.condition[k]];
            }
        }
        ss << "\n";
    }
    return ss.str();
}

std::vector<std::vector<size_t>> Circuit::parallel_layers() const {
    std::vector<size_t> qubit_free(num_qubits_, 0);
    std::vector<size_t> result_ready(result_labels_.size(), 0);
    std::vector<std::vector<size_t>> layers;
    for (size_t t = 0; t < gates_.size(); t++) {
        const Gate &g = gates_[t];
        size_t layer = 0;
        for (uint32_t q : g.qubits) {
            layer = std::max(layer, qubit_free[q]);
        }
        for (uint32_t c : g.condition) {
            layer = std::max(layer, result_ready[c]);
        }
        if (layer >= layers.size()) {
            layers.resize(layer + 1);
        }
        layers[layer].push_back(t);
        for (uint32_t q : g.qubits) {
            qubit_free[q] = layer + 1;
        }
        if (g.result >= 0) {
            result_ready[g.result] = layer + 1;
        }
    }
    return layers;
}

namespace {

void conj_h(SignedPauli &p, uint32_t q) {
    bool x = p.pauli.x[q];
    bool z = p.pauli.z[q];
    p.negative ^= x && z;
    p.pauli.x.set(q, z);
    p.pauli.z.set(q, x);
}

void conj_cnot(SignedPauli &p, uint32_t a, uint32_t b) {
    bool xa = p.pauli.x[a];
    bool za = p.pauli.z[a];
    bool xb = p.pauli.x[b];
    bool zb = p.pauli.z[b];
    p.negative ^= xa && zb && !(xb ^ za);
    p.pauli.x.set(b, xb ^ xa);
    p.pauli.z.set(a, za ^ zb);
}

}  // namespace

void conjugate_by_gate(SignedPauli &p, const Gate &gate) {
    uint32_t q = gate.qubits[0];
    bool x = p.pauli.x[q];
    bool z = p.pauli.z[q];
    switch (gate.kind) {
        case GateKind::hadamard:
            conj_h(p, q);
            return;
        case GateKind::phase:
            p.negative ^= x && z;
            p.pauli.z.set(q, z ^ x);
            return;
        case GateKind::phase_dag:
            p.negative ^= x && !z;
            p.pauli.z.set(q, z ^ x);
            return;
        case GateKind::pauli_x:
            p.negative ^= z;
            return;
        case GateKind::pauli_y:
            p.negative ^= x ^ z;
            return;
        case GateKind::pauli_z:
            p.negative ^= x;
            return;
        case GateKind::cnot:
            conj_cnot(p, gate.qubits[0], gate.qubits[1]);
            return;
        case GateKind::cz:
            conj_h(p, gate.qubits[1]);
            conj_cnot(p, gate.qubits[0], gate.qubits[1]);
            conj_h(p, gate.qubits[1]);
            return;
        default:
            throw std::invalid_argument("conjugate_by_gate: " + std::string(gate_name(gate.kind)) + " is not a unitary Clifford gate");
    }
}

Circuit synth_stabilizer_state(const std::vector<SignedPauli> &generators) {
    const size_t n = generators.size();
    RowSpace span;
    for (size_t a = 0; a < n; a++) {
        if (generators[a].num_qubits() != n) {
            throw std::invalid_argument("synth_stabilizer_state: need exactly one generator per qubit");
        }
        for (size_t b = 0; b < a; b++) {
            if (!generators[a].commutes_with(generators[b])) {
                throw std::invalid_argument("synth_stabilizer_state: generators do not commute");
            }
        }
        if (!span.insert(generators[a].pauli.symplectic())) {
            throw std::invalid_argument("synth_stabilizer_state: generators are not independent");
        }
    }

    // Reduce the stabilizer group to <Z_0, ..., Z_{n-1}>, recording the gates; the preparation is
    // the inverse of that reduction.
    std::vector<SignedPauli> rows = generators;
    Circuit reduction;
    reduction.add_register("q", n);
    // Applies the gate just appended to the reduction circuit to every row.
    auto track = [&]() {
        for (auto &r : rows) {
            conjugate_by_gate(r, reduction.gates().back());
        }
    };

    std::vector<bool> used(n, false);
    std::vector<size_t> pivot_of(n);
    for (uint32_t q = 0; q < n; q++) {
        size_t pivot = n;
        for (size_t r = 0; r < n && pivot == n; r++) {
            if (!used[r] && rows[r].pauli.x[q]) {
                pivot = r;
            }
        }
        if (pivot == n) {
            for (size_t r = 0; r < n && pivot == n; r++) {
                if (!used[r] && rows[r].pauli.z[q]) {
                    pivot = r;
                }
            }
            if (pivot == n) {
                throw std::logic_error("synth_stabilizer_state: no pivot found");
            }
            reduction.hadamard(q);
            track();
        }
        used[pivot] = true;
        pivot_of[q] = pivot;
        for (uint32_t c = 0; c < n; c++) {
            if (c != q && rows[pivot].pauli.x[c]) {
                reduction.cnot(q, c);
                track();
            }
        }
        for (uint32_t c = 0; c < n; c++) {
            if (c != q && rows[pivot].pauli.z[c]) {
                reduction.cz(q, c);
                track();
            }
        }
        if (rows[pivot].pauli.z[q]) {
            reduction.phase_dag(q);
            track();
        }
        reduction.hadamard(q);
        track();
        for (size_t r = 0; r < n; r++) {
            if (r != pivot && rows[r].pauli.z[q]) {
                rows[r] *= rows[pivot];
            }
        }
    }
    for (uint32_t q = 0; q < n; q++) {
        if (rows[pivot_of[q]].negative) {
            reduction.pauli(q, 'X');
            track();
        }
    }
    return reduction.inverse();
}

}  // namespace qecstab
