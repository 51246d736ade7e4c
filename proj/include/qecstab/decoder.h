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

#ifndef QECSTAB_DECODER_H
#define QECSTAB_DECODER_H

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qecstab/codes.h"

namespace qecstab {

/// Minimum-weight coset-leader lookup from syndrome to correction.
///
/// General codes enumerate Paulis by weight up to t + 1. CSS codes built from a classical check
/// matrix use the product of two classical coset-leader tables (X part from the Z-check half of the
/// syndrome, Z part from the X-check half), which covers every syndrome and scales to Golay.
/// Ties between equal-weight leaders go to the lexicographically smaller (x, z) pair.
class DecoderTable {
   public:
    /// Throws std::invalid_argument if two inequivalent errors of weight <= t share a syndrome.
    static DecoderTable build(const StabilizerCode &code);

    /// Correction for `s`, or nullopt if no enumerated error produces it.
    std::optional<PauliOperator> lookup(const Syndrome &s) const;
    /// Like lookup, but unknown syndromes give the identity.
    PauliOperator correction(const Syndrome &s) const;

    /// Number of distinct syndromes with a stored correction.
    size_t size() const;
    size_t num_qubits() const {
        return n_;
    }
    size_t syndrome_length() const {
        return m_;
    }
    bool is_product() const {
        return product_;
    }

    /// Overwrites one entry. Used for negative controls.
    void set_entry(const Syndrome &s, const PauliOperator &correction);

   private:
    size_t n_ = 0;
    size_t m_ = 0;
    bool product_ = false;
    // General form.
    std::unordered_map<uint64_t, PauliOperator> table_;
    // Product form: classical leaders indexed by the packed classical syndrome.
    size_t classical_checks_ = 0;
    std::vector<BitVector> leaders_;
    std::vector<bool> leader_known_;
    std::unordered_map<uint64_t, PauliOperator> overrides_;

    static uint64_t key(const Syndrome &s);
};

/// Minimum-weight classical coset leaders for a parity-check matrix with at most 24 rows.
/// Entry s (bit i of s = check i) is the leader for that syndrome; unreachable entries stay empty.
std::vector<std::optional<BitVector>> classical_coset_leaders(const BitMatrix &h);

}  // namespace qecstab

#endif
