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

#include "qecstab/networks.h"

#include <cmath>
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "qecstab/statevector.h"
#include "qecstab/tableau.h"
#include "support/test_support.h"

using namespace qecstab;

namespace {

// Codewords of a classical check matrix by enumerating all 2^n words.
std::vector<uint64_t> codewords(const BitMatrix &h) {
    std::vector<uint64_t> out;
    for (uint64_t w = 0; w < (uint64_t{1} << h.num_cols()); w++) {
        bool ok = true;
        for (size_t r = 0; r < h.num_rows() && ok; r++) {
            ok = __builtin_popcountll(w & h.row(r).to_uint64()) % 2 == 0;
        }
        if (ok) {
            out.push_back(w);
        }
    }
    return out;
}

// Dual code: words orthogonal to every codeword.
std::vector<uint64_t> dual_words(const std::vector<uint64_t> &code, size_t n) {
    std::vector<uint64_t> out;
    for (uint64_t w = 0; w < (uint64_t{1} << n); w++) {
        bool ok = true;
        for (uint64_t c : code) {
            ok = ok && __builtin_popcountll(w & c) % 2 == 0;
        }
        if (ok) {
            out.push_back(w);
        }
    }
    return out;
}

// Encoder on the data register, then `error`, then the round without verification.
Circuit encoded_round(const StabilizerCode &code, const ExtractionRound &round, const PauliOperator &error) {
    Circuit c;
    c.add_register("q", round.num_data + round.num_ancilla);
    c.append(synth_encoder(code));
    for (uint32_t j = 0; j < code.n; j++) {
        c.pauli(j, error.at(j));
    }
    c.append(round.without_verification());
    return c;
}

}  // namespace

TEST(Networks, style_names_round_trip) {
    for (auto s : {NetworkStyle::direct, NetworkStyle::ancilla, NetworkStyle::css}) {
        EXPECT_EQ(parse_style(style_name(s)), s);
    }
    for (auto v : {VerificationLevel::none, VerificationLevel::parity_checks, VerificationLevel::full}) {
        EXPECT_EQ(parse_verification(verification_name(v)), v);
    }
    EXPECT_THROW(parse_style("shor"), std::invalid_argument);
    EXPECT_THROW(parse_verification("some"), std::invalid_argument);
}

TEST(Networks, direct_five_qubit) {
    auto code = five_qubit_code();
    auto round = synth_direct_network(code);
    EXPECT_EQ(round.couplings(), 16u);
    EXPECT_EQ(round.width(), 9u);

    RngStream rng(1, 0);
    for (const char *error : {"IIIII", "XIIII", "ZIIII", "IIYII"}) {
        auto e = PauliOperator::from_string(error);
        for (int shot = 0; shot < 5; shot++) {
            TableauSimulator sim(round.width());
            auto results = sim.run(encoded_round(code, round, e), rng);
            EXPECT_EQ(round.evaluate(results), commutation_syndrome(code, e)) << error;
        }
    }
    auto s = commutation_syndrome(code, PauliOperator::from_string("XIIII"));
    EXPECT_EQ(s, BitVector::from_string("0101"));
}

TEST(Networks, ancilla_five_qubit_couples_each_ancilla_once) {
    auto code = five_qubit_code();
    auto round = synth_ancilla_network(code);
    EXPECT_EQ(round.num_ancilla, 10u);
    EXPECT_EQ(round.couplings(), 10u);
    std::map<uint32_t, int> touches;
    const Register &anc = round.interact.reg("ancilla");
    for (const auto &g : round.interact.gates()) {
        if (g.qubits.size() == 2) {
            for (uint32_t q : g.qubits) {
                if (q >= anc.start && q < anc.start + anc.size) {
                    touches[q]++;
                }
            }
        }
    }
    EXPECT_EQ(touches.size(), 10u);
    for (auto [q, count] : touches) {
        EXPECT_EQ(count, 1) << q;
    }
    // One coupling per data qubit per ancilla half: every data qubit is touched exactly twice.
    EXPECT_EQ(round.parity, code.stabilizer_matrix());
}

TEST(Networks, ancilla_five_qubit_syndromes_are_deterministic) {
    auto code = five_qubit_code();
    auto round = synth_ancilla_network(code, VerificationLevel::none);
    RngStream rng(2, 0);
    for (size_t q = 0; q < code.n; q++) {
        for (char p : {'X', 'Y', 'Z'}) {
            auto e = PauliOperator::single(code.n, q, p);
            for (int shot = 0; shot < 8; shot++) {
                TableauSimulator sim(round.width());
                auto results = sim.run(encoded_round(code, round, e), rng);
                EXPECT_EQ(round.evaluate(results), commutation_syndrome(code, e)) << e.to_string();
            }
        }
    }
}

TEST(Networks, ancilla_word_is_uniform_over_check_words) {
    // The measured word carries the syndrome and nothing else: with no error it is uniform over all
    // words w with S w = 0, where S is the stabilizer matrix acting on w = (u | v).
    auto code = five_qubit_code();
    auto round = synth_ancilla_network(code, VerificationLevel::none);
    BitMatrix s = code.stabilizer_matrix();
    auto words = codewords(s);
    std::set<uint64_t> allowed(words.begin(), words.end());
    ASSERT_EQ(allowed.size(), 64u);

    RngStream rng(3, 0);
    std::map<uint64_t, uint64_t> counts;
    const int shots = 6400;
    // Encoded |0> and encoded |1> must give the same distribution.
    BitVector one(1);
    one.set(0, true);
    for (int shot = 0; shot < shots; shot++) {
        Circuit c;
        c.add_register("q", round.width());
        c.append(synth_logical_basis_state(code, shot % 2 ? one : BitVector(1)));
        c.append(round.without_verification());
        TableauSimulator sim(round.width());
        auto word = sim.run(c, rng);
        uint64_t key = support::pack_bits(word);
        ASSERT_TRUE(allowed.count(key)) << key;
        counts[key]++;
    }
    EXPECT_EQ(counts.size(), 64u);
    double chi2 = 0;
    double expected = double(shots) / 64;
    for (auto [k, c] : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 63 degrees of freedom; 110 is far past the 0.999 quantile (~103).
    EXPECT_LT(chi2, 110);
}

TEST(Networks, css_steane_preparations_match_code_states) {
    auto code = code_by_name("steane7");
    auto [x_round, z_round] = synth_css_networks(code, VerificationLevel::none);
    EXPECT_EQ(x_round.couplings(), 7u);
    EXPECT_EQ(z_round.couplings(), 7u);
    auto hamming = codewords(*code.css_check);
    auto dual = dual_words(hamming, 7);
    ASSERT_EQ(hamming.size(), 16u);
    ASSERT_EQ(dual.size(), 8u);

    RngStream rng(4, 0);
    auto check = [&](const ExtractionRound &round, const std::vector<uint64_t> &words) {
        auto run = run_statevector(round.prep, StateVector(round.width()), PauliOperator(), rng);
        double amp = 1 / std::sqrt(double(words.size()));
        std::set<uint64_t> support(words.begin(), words.end());
        for (uint64_t i = 0; i < (uint64_t{1} << round.width()); i++) {
            uint64_t data = i & 0x7F;
            uint64_t anc = i >> 7;
            double want = (data == 0 && support.count(anc)) ? amp : 0;
            ASSERT_NEAR(std::abs(run.state.amplitude(i)), want, 1e-12) << i;
            ASSERT_NEAR(std::arg(run.state.amplitude(i) * std::conj(run.state.amplitude(words[0] << 7))), 0, 1e-9);
        }
    };
    // X-round: the sum over the Hamming code; Z-round: the sum over its dual.
    check(x_round, hamming);
    check(z_round, dual);
}

TEST(Networks, css_rounds_see_their_own_error_type) {
    auto code = code_by_name("steane7");
    auto [x_round, z_round] = synth_css_networks(code, VerificationLevel::none);
    std::vector<size_t> x_bits = {3, 4, 5};
    std::vector<size_t> z_bits = {0, 1, 2};
    EXPECT_EQ(x_round.syndrome_bits, x_bits);
    EXPECT_EQ(z_round.syndrome_bits, z_bits);
    RngStream rng(5, 0);
    for (size_t q = 0; q < 7; q++) {
        for (char p : {'X', 'Y', 'Z'}) {
            auto e = PauliOperator::single(7, q, p);
            auto full = commutation_syndrome(code, e);
            for (const auto *round : {&x_round, &z_round}) {
                for (int shot = 0; shot < 4; shot++) {
                    TableauSimulator sim(round->width());
                    auto bits = round->evaluate(sim.run(encoded_round(code, *round, e), rng));
                    for (size_t r = 0; r < bits.size(); r++) {
                        EXPECT_EQ(bits[r], full[round->syndrome_bits[r]]) << round->name << " " << e.to_string();
                    }
                }
            }
        }
    }
}

TEST(Networks, css_requires_css_code) {
    EXPECT_THROW(synth_css_networks(five_qubit_code()), std::invalid_argument);
}

TEST(Networks, verification_counts) {
    auto steane = code_by_name("steane7");
    auto [x_pc, z_pc] = synth_css_networks(steane, VerificationLevel::parity_checks);
    EXPECT_EQ(x_pc.verify_expected.size(), 3u);
    EXPECT_EQ(z_pc.verify_expected.size(), 3u);
    auto [x_full, z_full] = synth_css_networks(steane, VerificationLevel::full);
    EXPECT_EQ(x_full.verify_expected.size(), 7u);
    auto five = five_qubit_code();
    EXPECT_EQ(synth_ancilla_network(five, VerificationLevel::parity_checks).verify_expected.size(), 4u);
    EXPECT_EQ(synth_ancilla_network(five, VerificationLevel::full).verify_expected.size(), 10u);
    EXPECT_EQ(synth_ancilla_network(five, VerificationLevel::none).num_verifiers, 0u);
}

namespace {

// prep, then `fault` on the ancilla register, then verify. True iff every check gives its expected outcome.
bool verification_accepts(const ExtractionRound &round, const PauliOperator &fault, RngStream &rng) {
    Circuit c;
    c.add_register("q", round.width());
    c.append(round.prep);
    for (uint32_t j = 0; j < fault.num_qubits(); j++) {
        c.pauli(uint32_t(round.num_data) + j, fault.at(j));
    }
    c.append(round.verify);
    TableauSimulator sim(round.width());
    auto results = sim.run(c, rng);
    for (size_t i = 0; i < results.size(); i++) {
        if (results[i] != round.verify_expected[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(Networks, full_verification_accepts_clean_and_rejects_every_single_fault) {
    RngStream rng(6, 0);
    std::vector<ExtractionRound> rounds;
    rounds.push_back(synth_ancilla_network(five_qubit_code()));
    auto [x_round, z_round] = synth_css_networks(code_by_name("steane7"));
    rounds.push_back(x_round);
    rounds.push_back(z_round);
    for (const auto &round : rounds) {
        for (int shot = 0; shot < 20; shot++) {
            EXPECT_TRUE(verification_accepts(round, PauliOperator(round.num_ancilla), rng)) << round.name;
        }
        for (size_t q = 0; q < round.num_ancilla; q++) {
            for (char p : {'X', 'Y', 'Z'}) {
                auto fault = PauliOperator::single(round.num_ancilla, q, p);
                EXPECT_FALSE(verification_accepts(round, fault, rng)) << round.name << " " << fault.to_string();
            }
        }
    }
}

TEST(Networks, parity_check_verification_catches_word_errors_only) {
    RngStream rng(7, 0);
    auto [x_round, z_round] = synth_css_networks(code_by_name("steane7"), VerificationLevel::parity_checks);
    // The X-round word checks are Z^h: single X faults are caught, single Z faults pass.
    for (size_t q = 0; q < 7; q++) {
        EXPECT_FALSE(verification_accepts(x_round, PauliOperator::single(7, q, 'X'), rng));
        EXPECT_TRUE(verification_accepts(x_round, PauliOperator::single(7, q, 'Z'), rng));
        EXPECT_FALSE(verification_accepts(z_round, PauliOperator::single(7, q, 'Z'), rng));
        EXPECT_TRUE(verification_accepts(z_round, PauliOperator::single(7, q, 'X'), rng));
    }
}

TEST(Networks, encoders_prepare_logical_basis_states) {
    RngStream rng(8, 0);
    for (const char *name : {"five_qubit", "steane7"}) {
        auto code = code_by_name(name);
        auto logical = logical_operators(code);
        for (bool bit : {false, true}) {
            BitVector bits(1);
            bits.set(0, bit);
            auto run = run_statevector(synth_logical_basis_state(code, bits), StateVector(code.n), PauliOperator(), rng);
            for (size_t i = 0; i < code.num_generators(); i++) {
                EXPECT_NEAR(run.state.expectation(code.generator(i)), 1, 1e-9) << name;
            }
            EXPECT_NEAR(run.state.expectation(SignedPauli(logical.zs[0])), bit ? -1 : 1, 1e-9) << name;
        }
    }
}

TEST(Networks, css_zero_matches_encoder) {
    auto code = code_by_name("steane7");
    RngStream rng(9, 0);
    std::vector<uint32_t> targets = {7, 8, 9, 10, 11, 12, 13};
    auto prepared = run_statevector(synth_css_zero(code, targets, 14), StateVector(14), PauliOperator(), rng);
    Circuit shifted;
    shifted.add_register("q", 14);
    shifted.append_mapped(synth_encoder(code), targets);
    auto encoded = run_statevector(shifted, StateVector(14), PauliOperator(), rng);
    EXPECT_NEAR(std::abs(prepared.state.inner(encoded.state)), 1, 1e-12);
}

TEST(Networks, transversal_cnot_acts_logically) {
    auto code = code_by_name("steane7");
    auto logical = logical_operators(code);
    RngStream rng(10, 0);
    BitVector one(1);
    one.set(0, true);
    Circuit c;
    c.add_register("q", 14);
    c.append(synth_logical_basis_state(code, one));
    std::vector<uint32_t> second = {7, 8, 9, 10, 11, 12, 13};
    c.append_mapped(synth_encoder(code), second);
    c.append(transversal_cnot(7, 0, 7, 14));
    EXPECT_EQ(transversal_cnot(7, 0, 7, 14).count(GateKind::cnot), 7u);
    auto run = run_statevector(c, StateVector(14), PauliOperator(), rng);
    EXPECT_NEAR(run.state.expectation(SignedPauli(logical.zs[0]), 0), -1, 1e-9);
    EXPECT_NEAR(run.state.expectation(SignedPauli(logical.zs[0]), 7), -1, 1e-9);
    EXPECT_THROW(transversal_cnot(7, 0, 3, 14), std::invalid_argument);
    EXPECT_THROW(transversal_cnot(7, 0, 8, 14), std::invalid_argument);
}
