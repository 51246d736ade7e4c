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

#ifndef QECSTAB_NETWORKS_H
#define QECSTAB_NETWORKS_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qecstab/circuit.h"
#include "qecstab/codes.h"

namespace qecstab {

enum class NetworkStyle { direct, ancilla, css };
std::string_view style_name(NetworkStyle style);
/// "direct", "ancilla" or "css".
NetworkStyle parse_style(std::string_view text);

/// Which stabilizers of a prepared ancilla are measured before it is used.
///
/// `parity_checks` measures only the checks that the measured word must satisfy. `full` also
/// measures a generating set of the remaining stabilizers, which catches the correlated errors a
/// single preparation fault can leave on the ancilla.
enum class VerificationLevel { none, parity_checks, full };
std::string_view verification_name(VerificationLevel level);
VerificationLevel parse_verification(std::string_view text);

/// Verification sub-circuit plus the outcome each measurement must give for acceptance.
struct VerificationCircuit {
    Circuit circuit;
    std::vector<bool> expected;
};

/// Measures each check (a signed Pauli on `targets`) onto its own fresh qubit from `verifiers`.
/// Pure-Z checks use cnot gates onto a |0> verifier and a Z measurement; other checks use a |+>
/// verifier with controlled Paulis and an X measurement. `width` is the total circuit width.
VerificationCircuit synth_verification(
    const std::vector<SignedPauli> &checks,
    const std::vector<uint32_t> &targets,
    const std::vector<uint32_t> &verifiers,
    size_t width);

/// One syndrome-extraction cycle on qubit layout [data | ancilla | verifiers].
struct ExtractionRound {
    std::string name;
    size_t num_data = 0;
    size_t num_ancilla = 0;
    size_t num_verifiers = 0;
    /// Ancilla preparation.
    Circuit prep;
    /// Verification of the prepared ancilla; result i must equal verify_expected[i].
    Circuit verify;
    std::vector<bool> verify_expected;
    /// Data-ancilla couplings and ancilla measurements.
    Circuit interact;
    /// Each row is a parity check on the interact result word; row r yields syndrome bit
    /// syndrome_bits[r] of the code.
    BitMatrix parity;
    std::vector<size_t> syndrome_bits;

    size_t width() const {
        return num_data + num_ancilla + num_verifiers;
    }
    /// Number of two-qubit gates between data and ancilla.
    size_t couplings() const;
    /// prep, verify and interact concatenated.
    Circuit full() const;
    /// prep then interact on the data and ancilla registers only (width num_data + num_ancilla).
    Circuit without_verification() const;
    /// Syndrome bits (in syndrome_bits order) from a measured interact word.
    BitVector evaluate(const std::vector<bool> &word) const;
};

struct RecoveryNetwork {
    NetworkStyle style;
    std::vector<ExtractionRound> rounds;
};

/// One |+> ancilla per generator with controlled Paulis onto the data; no verification.
ExtractionRound synth_direct_network(const StabilizerCode &code);
/// 2n-qubit prepared ancilla, one coupling per ancilla qubit.
ExtractionRound synth_ancilla_network(const StabilizerCode &code, VerificationLevel level = VerificationLevel::full);
/// X-error round then Z-error round, each with an n-qubit ancilla. Throws for non-CSS codes.
std::pair<ExtractionRound, ExtractionRound> synth_css_networks(const StabilizerCode &code, VerificationLevel level = VerificationLevel::full);
RecoveryNetwork synth_recovery_network(const StabilizerCode &code, NetworkStyle style, VerificationLevel level = VerificationLevel::full);

/// Unitary on n qubits taking |0...0> to the encoded |0...0>_E.
Circuit synth_encoder(const StabilizerCode &code);
/// Encoder followed by logical X on every logical qubit whose bit is set.
Circuit synth_logical_basis_state(const StabilizerCode &code, const BitVector &logical_bits);
/// Prep-and-encode of the code space |0_E> for a CSS code: prep_zero, then Hadamards on pivot
/// positions of the classical checks, then cnot fan-outs. Qubits are `targets` within `width`.
Circuit synth_css_zero(const StabilizerCode &code, const std::vector<uint32_t> &targets, size_t width);

/// n pairwise cnot gates from block a (qubits a_start..) to block b (b_start..) within `width`.
Circuit transversal_cnot(size_t n, uint32_t a_start, uint32_t b_start, size_t width);

}  // namespace qecstab

#endif
