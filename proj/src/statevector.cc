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

#include "qecstab/statevector.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qecstab {

namespace {

using cd = std::complex<double>;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_width(size_t n) {
    if (n > kMaxStatevectorQubits) {
        std::stringstream ss;
        ss << "statevector simulation is limited to " << kMaxStatevectorQubits << " qubits, got " << n;
        throw std::invalid_argument(ss.str());
    }
}

cd i_power(size_t k) {
    static const cd powers[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    return powers[k & 3];
}

void apply_gate(StateVector &s, const Gate &g, std::vector<bool> &results, RngStream &rng) {
    size_t q = g.qubits[0];
    switch (g.kind) {
        case GateKind::prep_zero:
            s.prep_zero(q, rng);
            break;
        case GateKind::hadamard:
            s.hadamard(q);
            break;
        case GateKind::phase:
            s.phase(q);
            break;
        case GateKind::phase_dag:
            s.phase_dag(q);
            break;
        case GateKind::pauli_x:
            s.pauli(q, 'X');
            break;
        case GateKind::pauli_y:
            s.pauli(q, 'Y');
            break;
        case GateKind::pauli_z:
            s.pauli(q, 'Z');
            break;
        case GateKind::cnot:
            s.cnot(q, g.qubits[1]);
            break;
        case GateKind::cz:
            s.cz(q, g.qubits[1]);
            break;
        case GateKind::measure_z:
            results[g.result] = s.measure_z(q, rng);
            break;
        case GateKind::measure_x:
            results[g.result] = s.measure_x(q, rng);
            break;
        case GateKind::classically_controlled_pauli: {
            bool parity = false;
            for (uint32_t c : g.condition) {
                parity ^= results[c];
            }
            if (parity) {
                s.pauli(q, g.pauli);
            }
            break;
        }
    }
}

char pauli_from_bits(uint8_t bits) {
    static constexpr char kNames[] = {'I', 'X', 'Z', 'Y'};
    return kNames[bits & 3];
}

}  // namespace

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amps_.assign(size_t{1} << num_qubits, cd(0, 0));
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<std::complex<double>> amplitudes) {
    size_t n = 0;
    while ((size_t{1} << n) < amplitudes.size()) {
        n++;
    }
    if ((size_t{1} << n) != amplitudes.size()) {
        throw std::invalid_argument("amplitude count is not a power of two");
    }
    StateVector s(n);
    s.amps_ = std::move(amplitudes);
    return s;
}

void StateVector::hadamard(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t b = 0; b < amps_.size(); b++) {
        if (!(b & bit)) {
            cd a0 = amps_[b];
            cd a1 = amps_[b | bit];
            amps_[b] = (a0 + a1) * kInvSqrt2;
            amps_[b | bit] = (a0 - a1) * kInvSqrt2;
        }
    }
}

void StateVector::phase(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t b = 0; b < amps_.size(); b++) {
        if (b & bit) {
            amps_[b] *= cd(0, 1);
        }
    }
}

void StateVector::phase_dag(size_t q) {
    size_t bit = size_t{1} << q;
    for (size_t b = 0; b < amps_.size(); b++) {
        if (b & bit) {
            amps_[b] *= cd(0, -1);
        }
    }
}

void StateVector::pauli(size_t q, char p) {
    size_t bit = size_t{1} << q;
    for (size_t b = 0; b < amps_.size(); b++) {
        if (b & bit) {
            continue;
        }
        cd a0 = amps_[b];
        cd a1 = amps_[b | bit];
        switch (p) {
            case 'X':
                amps_[b] = a1;
                amps_[b | bit] = a0;
                break;
            case 'Y':
                amps_[b] = cd(0, -1) * a1;
                amps_[b | bit] = cd(0, 1) * a0;
                break;
            case 'Z':
                amps_[b | bit] = -a1;
                break;
            default:
                break;
        }
    }
}

void StateVector::cnot(size_t control, size_t target) {
    size_t c = size_t{1} << control;
    size_t t = size_t{1} << target;
    for (size_t b = 0; b < amps_.size(); b++) {
        if ((b & c) && !(b & t)) {
            std::swap(amps_[b], amps_[b | t]);
        }
    }
}

void StateVector::cz(size_t a, size_t b) {
    size_t mask = (size_t{1} << a) | (size_t{1} << b);
    for (size_t k = 0; k < amps_.size(); k++) {
        if ((k & mask) == mask) {
            amps_[k] = -amps_[k];
        }
    }
}

bool StateVector::measure_z(size_t q, RngStream &rng) {
    size_t bit = size_t{1} << q;
    double p1 = 0;
    for (size_t b = 0; b < amps_.size(); b++) {
        if (b & bit) {
            p1 += std::norm(amps_[b]);
        }
    }
    double total = norm();
    bool outcome = rng.uniform() * total < p1;
    double kept = outcome ? p1 : total - p1;
    double scale = 1.0 / std::sqrt(kept);
    for (size_t b = 0; b < amps_.size(); b++) {
        if (bool(b & bit) == outcome) {
            amps_[b] *= scale;
        } else {
            amps_[b] = 0;
        }
    }
    return outcome;
}

bool StateVector::measure_x(size_t q, RngStream &rng) {
    hadamard(q);
    bool outcome = measure_z(q, rng);
    hadamard(q);
    return outcome;
}

void StateVector::prep_zero(size_t q, RngStream &rng) {
    if (measure_z(q, rng)) {
        pauli(q, 'X');
    }
}

void StateVector::apply_pauli(const PauliOperator &p, size_t offset) {
    if (offset + p.num_qubits() > num_qubits_) {
        throw std::invalid_argument("apply_pauli: operator exceeds the state width");
    }
    size_t xm = 0;
    size_t zm = 0;
    for (size_t j = 0; j < p.num_qubits(); j++) {
        xm |= size_t(p.x[j]) << (offset + j);
        zm |= size_t(p.z[j]) << (offset + j);
    }
    cd base = i_power(std::popcount(xm & zm));
    std::vector<cd> out(amps_.size());
    for (size_t b = 0; b < amps_.size(); b++) {
        cd ph = (std::popcount(b & zm) & 1) ? -base : base;
        out[b ^ xm] = ph * amps_[b];
    }
    amps_ = std::move(out);
}

double StateVector::expectation(const SignedPauli &p, size_t offset) const {
    StateVector moved = *this;
    moved.apply_pauli(p.pauli, offset);
    double value = inner(moved).real();
    return p.negative ? -value : value;
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::complex<double> StateVector::inner(const StateVector &other) const {
    if (other.amps_.size() != amps_.size()) {
        throw std::invalid_argument("inner: states have different widths");
    }
    cd total = 0;
    for (size_t b = 0; b < amps_.size(); b++) {
        total += std::conj(amps_[b]) * other.amps_[b];
    }
    return total;
}

void StateVector::normalize() {
    double scale = 1.0 / std::sqrt(norm());
    for (auto &a : amps_) {
        a *= scale;
    }
}

StateVector StateVector::extended(size_t extra) const {
    StateVector out(num_qubits_ + extra);
    std::fill(out.amps_.begin(), out.amps_.end(), cd(0, 0));
    std::copy(amps_.begin(), amps_.end(), out.amps_.begin());
    return out;
}

StatevectorRun run_statevector(const Circuit &c, const StateVector &input, const PauliOperator &injected, RngStream &rng) {
    check_width(c.num_qubits());
    if (input.num_qubits() > c.num_qubits()) {
        throw std::invalid_argument("run_statevector: input state is wider than the circuit");
    }
    StatevectorRun run{input.extended(c.num_qubits() - input.num_qubits()), std::vector<bool>(c.num_results())};
    if (injected.num_qubits() > 0) {
        run.state.apply_pauli(injected);
    }
    for (const auto &g : c.gates()) {
        apply_gate(run.state, g, run.results, rng);
    }
    return run;
}

StatevectorRun run_statevector_noisy(const Circuit &c, const StateVector &input, const NoiseParams &noise, RngStream &rng) {
    noise.validate();
    check_width(c.num_qubits());
    StatevectorRun run{input.extended(c.num_qubits() - input.num_qubits()), std::vector<bool>(c.num_results())};
    std::vector<bool> touched(c.num_qubits());
    for (const auto &g : c.gates()) {
        apply_gate(run.state, g, run.results, rng);
        if (rng.bernoulli(noise.gamma)) {
            if (is_measurement(g.kind)) {
                run.results[g.result] = rng.bit();
            } else {
                for (uint32_t q : g.qubits) {
                    run.state.pauli(q, pauli_from_bits(rng.two_bits()));
                }
            }
        }
        std::fill(touched.begin(), touched.end(), false);
        for (uint32_t q : g.qubits) {
            touched[q] = true;
        }
        for (size_t q = 0; q < c.num_qubits(); q++) {
            if (!touched[q] && rng.bernoulli(noise.epsilon)) {
                run.state.pauli(q, pauli_from_bits(rng.two_bits()));
            }
        }
    }
    return run;
}

StateVector random_encoded_state(const StabilizerCode &code, RngStream &rng) {
    std::vector<cd> amps(size_t{1} << code.n);
    for (auto &a : amps) {
        a = cd(rng.normal(), rng.normal());
    }
    StateVector s = StateVector::from_amplitudes(std::move(amps));
    for (size_t i = 0; i < code.num_generators(); i++) {
        StateVector g = s;
        g.apply_pauli(code.generator(i).pauli);
        std::vector<cd> sum(s.amplitudes().size());
        for (size_t b = 0; b < sum.size(); b++) {
            sum[b] = 0.5 * (s.amplitude(b) + g.amplitude(b));
        }
        s = StateVector::from_amplitudes(std::move(sum));
    }
    s.normalize();
    return s;
}

double data_fidelity(const StateVector &phi, const StateVector &psi) {
    if (phi.num_qubits() > psi.num_qubits()) {
        throw std::invalid_argument("data_fidelity: reference state is wider than the joint state");
    }
    size_t low = size_t{1} << phi.num_qubits();
    size_t high = size_t{1} << (psi.num_qubits() - phi.num_qubits());
    double total = 0;
    for (size_t a = 0; a < high; a++) {
        cd overlap = 0;
        for (size_t d = 0; d < low; d++) {
            overlap += std::conj(phi.amplitude(d)) * psi.amplitude(d + a * low);
        }
        total += std::norm(overlap);
    }
    return total;
}

}  // namespace qecstab
