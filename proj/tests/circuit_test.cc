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

#include <cmath>

#include "gtest/gtest.h"
#include "qecstab/statevector.h"
#include "qecstab/tableau.h"
#include "support/test_support.h"

using namespace qecstab;

namespace {

Circuit single_gate(size_t n, GateKind kind, uint32_t a, uint32_t b) {
    Circuit c;
    c.add_register("q", n);
    switch (kind) {
        case GateKind::hadamard:
            c.hadamard(a);
            break;
        case GateKind::phase:
            c.phase(a);
            break;
        case GateKind::phase_dag:
            c.phase_dag(a);
            break;
        case GateKind::pauli_x:
            c.pauli(a, 'X');
            break;
        case GateKind::pauli_y:
            c.pauli(a, 'Y');
            break;
        case GateKind::pauli_z:
            c.pauli(a, 'Z');
            break;
        case GateKind::cnot:
            c.cnot(a, b);
            break;
        case GateKind::cz:
            c.cz(a, b);
            break;
        default:
            break;
    }
    return c;
}

StateVector random_state(size_t n, RngStream &rng) {
    std::vector<std::complex<double>> amps(size_t{1} << n);
    for (auto &a : amps) {
        a = {rng.normal(), rng.normal()};
    }
    auto s = StateVector::from_amplitudes(std::move(amps));
    s.normalize();
    return s;
}

}  // namespace

TEST(Circuit, text_dump) {
    Circuit c;
    c.add_register("data", 2);
    c.add_register("anc", 1);
    c.prep_zero(2);
    c.hadamard(2);
    c.cnot(2, 0);
    uint32_t r = c.measure_x(2, "s0");
    c.classically_controlled_pauli(1, 'Z', {r});
    EXPECT_EQ(c.to_text(),
              "t=0 prep_zero 2\n"
              "t=1 hadamard 2\n"
              "t=2 cnot 2 0\n"
              "t=3 measure_x 2 s0\n"
              "t=4 classically_controlled_pauli 1 Z^s0\n");
    EXPECT_EQ(c.reg("anc").start, 2u);
    EXPECT_EQ(c.count_couplings(c.reg("data"), c.reg("anc")), 1u);
    EXPECT_EQ(c.result_index("s0"), 0u);
}

TEST(Circuit, rejects_bad_gates) {
    Circuit c;
    c.add_register("q", 2);
    EXPECT_THROW(c.cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(c.hadamard(2), std::invalid_argument);
    EXPECT_THROW(c.classically_controlled_pauli(0, 'X', {0}), std::invalid_argument);
    EXPECT_THROW(c.add_register("q", 1), std::invalid_argument);
    c.measure_z(0, "m");
    EXPECT_THROW(c.inverse(), std::invalid_argument);
}

TEST(Circuit, append_renumbers_results) {
    Circuit a;
    a.add_register("q", 3);
    a.measure_z(0, "x");
    Circuit b;
    b.add_register("q", 2);
    uint32_t r = b.measure_z(1, "y");
    b.classically_controlled_pauli(0, 'X', {r});
    uint32_t offset = a.append_mapped(b, {2, 1}, "b.");
    EXPECT_EQ(offset, 1u);
    EXPECT_EQ(a.result_label(1), "b.y");
    EXPECT_EQ(a.gates()[2].qubits[0], 2u);
    EXPECT_EQ(a.gates()[2].condition[0], 1u);
}

TEST(Circuit, parallel_layers) {
    Circuit c;
    c.add_register("q", 4);
    c.hadamard(0);
    c.hadamard(1);
    c.cnot(0, 1);
    c.hadamard(3);
    auto layers = c.parallel_layers();
    ASSERT_EQ(layers.size(), 2u);
    EXPECT_EQ(layers[0], (std::vector<size_t>{0, 1, 3}));
    EXPECT_EQ(layers[1], (std::vector<size_t>{2}));
}

TEST(Circuit, conjugation_matches_statevector) {
    // G P |psi> must equal (G P G^dagger) G |psi> including the sign.
    RngStream rng(1, 0);
    const GateKind kinds[] = {GateKind::hadamard, GateKind::phase, GateKind::phase_dag, GateKind::pauli_x,
                              GateKind::pauli_y, GateKind::pauli_z, GateKind::cnot, GateKind::cz};
    for (GateKind kind : kinds) {
        for (uint64_t index = 0; index < 16; index++) {
            SignedPauli p(2);
            p.pauli.x.set(0, index & 1);
            p.pauli.z.set(0, index & 2);
            p.pauli.x.set(1, index & 4);
            p.pauli.z.set(1, index & 8);
            Circuit g = single_gate(2, kind, 0, 1);
            StateVector psi = random_state(2, rng);

            StateVector lhs = psi;
            lhs.apply_pauli(p.pauli);
            lhs = run_statevector(g, lhs, PauliOperator(), rng).state;

            SignedPauli q = p;
            conjugate_by_gate(q, g.gates()[0]);
            StateVector rhs = run_statevector(g, psi, PauliOperator(), rng).state;
            rhs.apply_pauli(q.pauli);
            double sign = q.negative ? -1 : 1;
            // P and Q are written with Y factors, so both sides carry the same i^#Y convention.
            for (size_t b = 0; b < 4; b++) {
                EXPECT_NEAR(std::abs(lhs.amplitude(b) - sign * rhs.amplitude(b)), 0, 1e-12)
                    << gate_name(kind) << " " << p.to_string();
            }
        }
    }
}

TEST(Circuit, stabilizer_state_synthesis) {
    RngStream rng(7, 0);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng.next() % 6;
        // Random stabilizer state from a unitary random circuit, read off the tableau.
        Circuit random = support::random_clifford_circuit(n, 4 * n, rng);
        Circuit unitary;
        unitary.add_register("q", n);
        for (const auto &g : random.gates()) {
            if (is_unitary(g.kind)) {
                unitary.append(single_gate(n, g.kind, g.qubits[0], g.qubits.size() > 1 ? g.qubits[1] : 0));
            }
        }
        TableauSimulator tableau(n);
        tableau.run(unitary, rng);
        auto generators = tableau.stabilizers();
        if (rng.bit()) {
            generators[0].negative ^= true;
        }
        Circuit prep = synth_stabilizer_state(generators);
        StateVector s = run_statevector(prep, StateVector(n), PauliOperator(), rng).state;
        for (const auto &g : generators) {
            EXPECT_NEAR(s.expectation(g), 1.0, 1e-10) << g.to_string();
        }
    }
}

TEST(Circuit, stabilizer_state_rejections) {
    EXPECT_THROW(synth_stabilizer_state({SignedPauli::from_string("X"), SignedPauli::from_string("Z")}), std::invalid_argument);
    EXPECT_THROW(synth_stabilizer_state({SignedPauli::from_string("XX"), SignedPauli::from_string("XX")}), std::invalid_argument);
    EXPECT_THROW(synth_stabilizer_state({SignedPauli::from_string("XX")}), std::invalid_argument);
}

TEST(Circuit, inverse_undoes_unitary) {
    RngStream rng(3, 0);
    Circuit c = synth_stabilizer_state({SignedPauli::from_string("-XYZ"), SignedPauli::from_string("ZZI"), SignedPauli::from_string("XXX")});
    Circuit round_trip = c;
    round_trip.append(c.inverse());
    StateVector s = run_statevector(round_trip, StateVector(3), PauliOperator(), rng).state;
    EXPECT_NEAR(std::abs(s.amplitude(0)), 1.0, 1e-12);
}
