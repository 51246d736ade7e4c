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

#ifndef QECSTAB_PAULI_H
#define QECSTAB_PAULI_H

#include <string>
#include <string_view>

#include "qecstab/gf2.h"

namespace qecstab {

/// An n-qubit Pauli operator with its global phase dropped.
///
/// Qubit j carries X if only x[j] is set, Z if only z[j] is set, and Y if both are set.
struct PauliOperator {
    BitVector x;
    BitVector z;

    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits) : x(num_qubits), z(num_qubits) {
    }
    PauliOperator(BitVector x_mask, BitVector z_mask);

    /// Parses "IXYZ" notation (case-insensitive, '_' accepted as identity).
    static PauliOperator from_string(std::string_view text);
    static PauliOperator single(size_t num_qubits, size_t qubit, char pauli);

    size_t num_qubits() const {
        return x.size();
    }
    size_t weight() const;
    bool is_identity() const {
        return x.none() && z.none();
    }
    bool commutes_with(const PauliOperator &other) const;
    char at(size_t qubit) const;

    /// Product with phases ignored.
    PauliOperator &operator*=(const PauliOperator &other);
    PauliOperator operator*(const PauliOperator &other) const;

    /// (x | z) as a single 2n-bit vector.
    BitVector symplectic() const {
        return concat(x, z);
    }
    std::string to_string() const;

    bool operator==(const PauliOperator &other) const = default;
    /// Lexicographic order of (x, z).
    bool operator<(const PauliOperator &other) const;
};

/// Hermitian Pauli operator with an explicit sign: (-1)^negative * P_0 (x) ... (x) P_{n-1}.
///
/// Used wherever the sign of a stabilizer matters (state synthesis, tableau simulation).
struct SignedPauli {
    PauliOperator pauli;
    bool negative = false;

    SignedPauli() = default;
    explicit SignedPauli(size_t num_qubits) : pauli(num_qubits) {
    }
    SignedPauli(PauliOperator p, bool neg = false) : pauli(std::move(p)), negative(neg) {
    }
    /// Accepts an optional leading '+' or '-'.
    static SignedPauli from_string(std::string_view text);

    size_t num_qubits() const {
        return pauli.num_qubits();
    }
    bool commutes_with(const SignedPauli &other) const {
        return pauli.commutes_with(other.pauli);
    }
    /// In-place right multiplication by a commuting operator. The product of two commuting Hermitian
    /// Paulis is Hermitian, so the result is again a signed Pauli. Throws if they anticommute.
    SignedPauli &operator*=(const SignedPauli &other);

    std::string to_string() const;
    bool operator==(const SignedPauli &other) const = default;
};

/// Power of i picked up when multiplying single-qubit Paulis (x1,z1)*(x2,z2), in {-1, 0, 1}.
int pauli_product_phase(bool x1, bool z1, bool x2, bool z2);

}  // namespace qecstab

#endif
