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

#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "qecstab/networks.h"
#include "qecstab/pauli_frame.h"
#include "qecstab/rng.h"
#include "qecstab/statevector.h"
#include "qecstab/tableau.h"
#include "support/test_support.h"

using namespace qecstab;

namespace {

using Histogram = std::map<uint64_t, uint64_t>;

Histogram tableau_histogram(const Circuit &c, size_t shots, RngStream &rng) {
    Histogram h;
    for (size_t s = 0; s < shots; s++) {
        TableauSimulator sim(c.num_qubits());
        h[support::pack_bits(sim.run(c, rng))]++;
    }
    return h;
}

Histogram statevector_histogram(const Circuit &c, const NoiseParams &noise, size_t shots, RngStream &rng) {
    Histogram h;
    for (size_t s = 0; s < shots; s++) {
        h[support::pack_bits(run_statevector_noisy(c, StateVector(c.num_qubits()), noise, rng).results)]++;
    }
    return h;
}

// One noiseless reference sample per circuit; the gauge randomization supplies the other branches.
Histogram frame_histogram(const Circuit &c, const NoiseParams &noise, size_t shots, uint64_t seed) {
    Histogram h;
    RngStream ref_rng(seed, uint64_t{1} << 40);
    TableauSimulator ref(c.num_qubits());
    auto reference = ref.run(c, ref_rng);
    for (size_t s = 0; s < shots; s++) {
        FrameSimulator sim(c.num_qubits(), noise, RngStream(seed, s));
        sim.randomize_gauge();
        sim.run_sampled(c, reference);
        std::vector<bool> bits(sim.results().begin(), sim.results().end());
        h[support::pack_bits(bits)]++;
    }
    return h;
}

}  // namespace

TEST(Rng, streams_are_reproducible_and_distinct) {
    RngStream a(5, 0), b(5, 0), c(5, 1), d(6, 0);
    uint64_t va = a.next();
    EXPECT_EQ(va, b.next());
    EXPECT_NE(va, c.next());
    EXPECT_NE(va, d.next());
}

TEST(Rng, geometric_mean) {
    RngStream rng(1, 0);
    double p = 0.05;
    double total = 0;
    const int draws = 200000;
    for (int k = 0; k < draws; k++) {
        total += double(rng.geometric(p));
    }
    // Mean (1-p)/p = 19, standard deviation sqrt(1-p)/p ~ 19.5.
    EXPECT_NEAR(total / draws, 19.0, 5 * 19.5 / std::sqrt(double(draws)));
    EXPECT_GT(rng.geometric(0), uint64_t{1} << 62);
    EXPECT_EQ(rng.geometric(1), 0u);
}

TEST(StateVector, basics) {
    StateVector s(2);
    s.hadamard(0);
    s.cnot(0, 1);
    EXPECT_NEAR(std::abs(s.amplitude(0)), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(std::abs(s.amplitude(3)), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(s.norm(), 1, 1e-12);
    EXPECT_NEAR(s.expectation(SignedPauli::from_string("XX")), 1, 1e-12);
    EXPECT_NEAR(s.expectation(SignedPauli::from_string("-YY")), 1, 1e-12);
    s.phase(0);
    EXPECT_NEAR(s.expectation(SignedPauli::from_string("YX")), 1, 1e-12);
    s.phase_dag(0);
    s.cz(0, 1);
    EXPECT_NEAR(s.expectation(SignedPauli::from_string("YY")), 1, 1e-12);
    EXPECT_THROW(StateVector(kMaxStatevectorQubits + 1), std::invalid_argument);
}

TEST(StateVector, measurement_collapses) {
    RngStream rng(2, 0);
    int ones = 0;
    for (int k = 0; k < 2000; k++) {
        StateVector s(2);
        s.hadamard(0);
        s.cnot(0, 1);
        bool a = s.measure_z(0, rng);
        bool b = s.measure_z(1, rng);
        EXPECT_EQ(a, b);
        ones += a;
        EXPECT_NEAR(s.norm(), 1, 1e-12);
    }
    EXPECT_NEAR(ones / 2000.0, 0.5, 0.06);
    StateVector plus(1);
    plus.hadamard(0);
    EXPECT_FALSE(plus.measure_x(0, rng));
}

TEST(StateVector, data_fidelity_ignores_ancilla) {
    RngStream rng(3, 0);
    auto code = code_by_name("steane7");
    StateVector phi = random_encoded_state(code, rng);
    for (size_t i = 0; i < code.num_generators(); i++) {
        EXPECT_NEAR(phi.expectation(code.generator(i)), 1, 1e-9);
    }
    StateVector joint = phi.extended(3);
    joint.hadamard(8);
    joint.cnot(8, 9);
    EXPECT_NEAR(data_fidelity(phi, joint), 1, 1e-12);
    joint.pauli(0, 'X');
    EXPECT_NEAR(data_fidelity(phi, joint), 0, 1e-12);
}

TEST(Tableau, matches_statevector_distributions) {
    RngStream rng(4, 0);
    for (int trial = 0; trial < 6; trial++) {
        Circuit c = support::random_clifford_circuit(3, 14, rng);
        auto a = tableau_histogram(c, 3000, rng);
        auto b = statevector_histogram(c, NoiseParams{}, 3000, rng);
        auto result = support::chi_square_homogeneity(a, b);
        EXPECT_GT(result.p_value, 1e-4) << c.to_text();
    }
}

TEST(PauliFrame, cnot_propagation) {
    Circuit c;
    c.add_register("q", 2);
    c.cnot(0, 1);
    RngStream rng(5, 0);
    EXPECT_EQ(run_pauli_frame(c, {}, rng, PauliOperator::from_string("XI")).frame, PauliOperator::from_string("XX"));
    EXPECT_EQ(run_pauli_frame(c, {}, rng, PauliOperator::from_string("IZ")).frame, PauliOperator::from_string("ZZ"));
    EXPECT_EQ(run_pauli_frame(c, {}, rng, PauliOperator::from_string("ZI")).frame, PauliOperator::from_string("ZI"));
    EXPECT_EQ(run_pauli_frame(c, {}, rng, PauliOperator::from_string("YI")).frame, PauliOperator::from_string("YX"));
}

TEST(PauliFrame, single_qubit_conjugations) {
    RngStream rng(6, 0);
    Circuit h;
    h.add_register("q", 1);
    h.hadamard(0);
    EXPECT_EQ(run_pauli_frame(h, {}, rng, PauliOperator::from_string("X")).frame, PauliOperator::from_string("Z"));
    Circuit s;
    s.add_register("q", 1);
    s.phase(0);
    EXPECT_EQ(run_pauli_frame(s, {}, rng, PauliOperator::from_string("X")).frame, PauliOperator::from_string("Y"));
    Circuit cz;
    cz.add_register("q", 2);
    cz.cz(0, 1);
    EXPECT_EQ(run_pauli_frame(cz, {}, rng, PauliOperator::from_string("XI")).frame, PauliOperator::from_string("XZ"));
}

TEST(PauliFrame, gate_fault_rate) {
    // With gamma = 1 every gate is followed by a uniformly random Pauli, identity included.
    Circuit c;
    c.add_register("q", 1);
    c.hadamard(0);
    RngStream rng(7, 0);
    const int trials = 40000;
    int hit = 0;
    for (int k = 0; k < trials; k++) {
        hit += !run_pauli_frame(c, NoiseParams{1, 0}, rng).frame.is_identity();
    }
    double sd = std::sqrt(0.75 * 0.25 / trials);
    EXPECT_NEAR(hit / double(trials), 0.75, 5 * sd);
}

TEST(PauliFrame, measurement_fault_randomizes_result) {
    Circuit c;
    c.add_register("q", 1);
    c.measure_z(0, "m");
    RngStream rng(8, 0);
    const int trials = 20000;
    int ones = 0;
    for (int k = 0; k < trials; k++) {
        ones += run_pauli_frame(c, NoiseParams{1, 0}, rng).flips[0];
    }
    EXPECT_NEAR(ones / double(trials), 0.5, 5 * 0.5 / std::sqrt(double(trials)));
}

TEST(PauliFrame, idle_rate) {
    // A qubit idle for T steps ends non-identity with probability 3/4 (1 - (1 - eps)^T).
    const size_t width = 21;
    const int steps = 50;
    const double eps = 0.01;
    Circuit c;
    c.add_register("q", width);
    for (int k = 0; k < steps; k++) {
        c.hadamard(0);
    }
    RngStream rng(9, 0);
    const int trials = 5000;
    int hit = 0;
    for (int k = 0; k < trials; k++) {
        auto frame = run_pauli_frame(c, NoiseParams{0, eps}, rng).frame;
        for (size_t q = 1; q < width; q++) {
            hit += frame.at(q) != 'I';
        }
    }
    double expected = 0.75 * (1 - std::pow(1 - eps, steps));
    double samples = double(trials) * (width - 1);
    double rate = hit / samples;
    EXPECT_NEAR(rate, expected, 5 * std::sqrt(expected * (1 - expected) / samples));
}

TEST(PauliFrame, deterministic_for_fixed_stream) {
    auto code = code_by_name("steane7");
    auto round = synth_ancilla_network(code);
    Circuit c = round.full();
    NoiseParams noise{0.01, 0.001};
    RngStream a(10, 3), b(10, 3);
    auto ra = run_pauli_frame(c, noise, a);
    auto rb = run_pauli_frame(c, noise, b);
    EXPECT_EQ(ra.flips, rb.flips);
    EXPECT_EQ(ra.frame, rb.frame);
}

TEST(PauliFrame, noiseless_flips_give_commutation_syndrome) {
    auto code = five_qubit_code();
    for (auto style : {NetworkStyle::direct, NetworkStyle::ancilla}) {
        auto round = synth_recovery_network(code, style).rounds[0];
        Circuit c = round.full();
        RngStream rng(11, 0);
        for (size_t q = 0; q < code.n; q++) {
            for (char p : {'X', 'Y', 'Z'}) {
                auto e = PauliOperator::single(code.n, q, p);
                auto run = run_pauli_frame(c, {}, rng, e);
                size_t verify_results = round.verify_expected.size();
                std::vector<bool> word(run.flips.begin() + verify_results, run.flips.end());
                EXPECT_EQ(round.evaluate(word), commutation_syndrome(code, e)) << e.to_string();
                for (size_t i = 0; i < verify_results; i++) {
                    EXPECT_FALSE(run.flips[i]);
                }
            }
        }
    }
}

TEST(PauliFrame, sampled_matches_statevector_under_noise) {
    RngStream rng(12, 0);
    NoiseParams noise{0.05, 0.02};
    for (int trial = 0; trial < 4; trial++) {
        Circuit c = support::random_clifford_circuit(3, 12, rng);
        auto a = frame_histogram(c, noise, 4000, 100 + trial);
        auto b = statevector_histogram(c, noise, 4000, rng);
        auto result = support::chi_square_homogeneity(a, b);
        EXPECT_GT(result.p_value, 1e-4) << c.to_text();
    }
}

TEST(PauliFrame, sampled_matches_tableau_noiseless) {
    RngStream rng(13, 0);
    for (int trial = 0; trial < 4; trial++) {
        Circuit c = support::random_clifford_circuit(4, 16, rng);
        auto a = frame_histogram(c, {}, 3000, 200 + trial);
        auto b = tableau_histogram(c, 3000, rng);
        auto result = support::chi_square_homogeneity(a, b);
        EXPECT_GT(result.p_value, 1e-4) << c.to_text();
    }
}
