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

#include "qecstab/pauli.h"

#include <stdexcept>

namespace qecstab {

PauliOperator::PauliOperator(BitVector x_mask, BitVector z_mask) : x(std::move(x_mask)), z(std::move(z_mask)) {
    if (x.size() != z.size()) {
        throw std::invalid_argument("PauliOperator: x and z masks differ in length");
    }
}

PauliOperator PauliOperator::from_string(std::string_view text) {
    PauliOperator result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
            case 'i':
            case '_':
                break;
            case 'X':
            case 'x':
                result.x.set(k, true);
                break;
            case 'Z':
            case 'z':
                result.z.set(k, true);
                break;
            case 'Y':
            case 'y':
                result.x.set(k, true);
                result.z.set(k, true);
                break;
            default:
                throw std::invalid_argument("unrecognized Pauli character in '" + std::string(text) + "'");
        }
    }
    return result;
}

PauliOperator PauliOperator::single(size_t num_qubits, size_t qubit, char pauli) {
    PauliOperator result(num_qubits);
    if (pauli == 'X' || pauli == 'Y') {
        result.x.set(qubit, true);
    }
    if (pauli == 'Z' || pauli == 'Y') {
        result.z.set(qubit, true);
    }
    return result;
}

size_t PauliOperator::weight() const {
    BitVector support = x;
    for (size_t k = 0; k < z.size(); k++) {
        if (z[k]) {
            support.set(k, true);
        }
    }
    return support.weight();
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    return dot(x, other.z) == dot(z, other.x);
}

char PauliOperator::at(size_t qubit) const {
    static constexpr char kNames[] = {'I', 'X', 'Z', 'Y'};
    return kNames[int(x[qubit]) | (int(z[qubit]) << 1)];
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    x ^= other.x;
    z ^= other.z;
    return *this;
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    PauliOperator result = *this;
    result *= other;
    return result;
}

std::string PauliOperator::to_string() const {
    std::string result(num_qubits(), 'I');
    for (size_t k = 0; k < num_qubits(); k++) {
        result[k] = at(k);
    }
    return result;
}

bool PauliOperator::operator<(const PauliOperator &other) const {
    if (x != other.x) {
        return x < other.x;
    }
    return z < other.z;
}

int pauli_product_phase(bool x1, bool z1, bool x2, bool z2) {
    // Exponent of i in P1 * P2 = i^g * P3, following Aaronson & Gottesman's g function.
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return int(z2) - int(x2);
    }
    if (x1) {
        return int(z2) * (2 * int(x2) - 1);
    }
    return int(x2) * (1 - 2 * int(z2));
}

SignedPauli SignedPauli::from_string(std::string_view text) {
    bool neg = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        neg = text[0] == '-';
        text.remove_prefix(1);
    }
    return SignedPauli(PauliOperator::from_string(text), neg);
}

SignedPauli &SignedPauli::operator*=(const SignedPauli &other) {
    if (!commutes_with(other)) {
        throw std::invalid_argument("SignedPauli product of anticommuting operators is not Hermitian");
    }
    int phase = 2 * int(negative) + 2 * int(other.negative);
    for (size_t k = 0; k < num_qubits(); k++) {
        phase += pauli_product_phase(pauli.x[k], pauli.z[k], other.pauli.x[k], other.pauli.z[k]);
    }
    phase = ((phase % 4) + 4) % 4;
    pauli *= other.pauli;
    negative = phase == 2;
    return *this;
}

std::string SignedPauli::to_string() const {
    return (negative ? "-" : "+") + pauli.to_string();
}

}  // namespace qecstab
