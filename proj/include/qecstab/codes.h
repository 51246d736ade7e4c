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

#ifndef QECSTAB_CODES_H
#define QECSTAB_CODES_H

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qecstab/gf2.h"
#include "qecstab/pauli.h"

namespace qecstab {

/// One bit per stabilizer generator; bit i is set when the error anticommutes with generator i.
using Syndrome = BitVector;

/// Classical binary linear [n, k] code given by its parity-check matrix.
struct ClassicalCode {
    std::string name;
    size_t n = 0;
    size_t k = 0;
    BitMatrix parity_check;

    /// Checks rank(parity_check) == n - k.
    void validate() const;
};

/// The cyclic [7,4,3] Hamming code, checks 1110100 / 0111010 / 0011101.
ClassicalCode hamming7();
/// The cyclic [23,12,7] Golay code with generator polynomial 1 + x + x^5 + x^6 + x^7 + x^9 + x^11.
ClassicalCode golay23();
/// Looks up "hamming7" or "golay23".
ClassicalCode classical_code_by_name(std::string_view name);

/// An [[n, k, d]] stabilizer code in (Hx | Hz) form.
///
/// Generator i is the Hermitian Pauli with X on the support of hx row i, Z on hz row i, and Y where
/// both are set, taken with a + sign. Redundant (dependent) generator rows are allowed.
struct StabilizerCode {
    std::string name;
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    size_t t = 0;
    BitMatrix hx;
    BitMatrix hz;
    /// Present when the code was built from a classical dual-containing code, in which case the X
    /// generators and the Z generators are both copies of this classical check matrix.
    std::optional<BitMatrix> css_check;

    size_t num_generators() const {
        return hx.num_rows();
    }
    bool is_css() const {
        return css_check.has_value();
    }
    SignedPauli generator(size_t index) const;
    /// (hx | hz), one 2n-bit row per generator.
    BitMatrix stabilizer_matrix() const;
    /// True iff the Pauli (phase ignored) is a product of generators.
    bool in_stabilizer_group(const PauliOperator &p) const;
    /// True iff p commutes with every generator but is not in the stabilizer group.
    bool is_nontrivial_logical(const PauliOperator &p) const;

    /// Throws std::invalid_argument if generators fail to commute or rank(hx|hz) != n - k.
    void validate() const;

    /// "[[n,k,d]]"
    std::string parameters() const;

    bool operator==(const StabilizerCode &other) const;
};

/// Builds a code from check matrices, computing k from the rank. If `distance` is absent it is found
/// by brute force, which requires n <= 12. A supplied distance is cross-checked when n <= 12.
StabilizerCode make_stabilizer_code(std::string name, BitMatrix hx, BitMatrix hz, std::optional<size_t> distance = {});

/// The [[5,1,3]] perfect code.
StabilizerCode five_qubit_code();
/// [[n, 2k_c - n, d]] code whose X and Z generators both come from the classical check matrix.
/// Throws std::invalid_argument if the checks are not self-orthogonal or 2k_c < n.
StabilizerCode css_from_classical(const ClassicalCode &c, std::optional<size_t> distance = {});
/// Registry: "five_qubit", "steane7", "golay23".
StabilizerCode code_by_name(std::string_view name);
std::vector<std::string> registry_names();

Syndrome commutation_syndrome(const StabilizerCode &code, const PauliOperator &e);

/// Minimum weight of a nontrivial logical operator, by enumeration. Requires n <= 12 and k >= 1.
size_t distance_bruteforce(const StabilizerCode &code);

/// A symplectic basis of logical operators: xs[i] and zs[j] anticommute iff i == j.
struct LogicalOperators {
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
};
/// For CSS codes the X logicals are pure-X and the Z logicals pure-Z.
LogicalOperators logical_operators(const StabilizerCode &code);

/// Calls `body` once for every Pauli on n qubits with exactly `weight` non-identity factors, in
/// lexicographic order of the support and then of the X/Z/Y assignment. Returning false stops.
void for_each_pauli_of_weight(size_t n, size_t weight, const std::function<bool(const PauliOperator &)> &body);

/// Code file text: optional "# [[n,k,d]] name" header, then one "xxxxx|zzzzz" row per generator.
StabilizerCode parse_code_file(std::string_view text);
std::string emit_code_file(const StabilizerCode &code);

}  // namespace qecstab

#endif
