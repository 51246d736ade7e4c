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

#ifndef QECSTAB_TABLEAU_H
#define QECSTAB_TABLEAU_H

#include <vector>

#include "qecstab/circuit.h"
#include "qecstab/rng.h"

namespace qecstab {

/// Aaronson-Gottesman stabilizer tableau. Produces exact noiseless samples of Clifford circuits
/// at any width; used for reference samples and as an independent check on the other engines.
class TableauSimulator {
   public:
    explicit TableauSimulator(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void hadamard(size_t q);
    void phase(size_t q);
    void phase_dag(size_t q);
    void pauli(size_t q, char p);
    void cnot(size_t control, size_t target);
    void cz(size_t a, size_t b);
    bool measure_z(size_t q, RngStream &rng);
    bool measure_x(size_t q, RngStream &rng);
    void prep_zero(size_t q, RngStream &rng);

    /// Runs every gate and returns the measurement record.
    std::vector<bool> run(const Circuit &c, RngStream &rng);

    /// Current stabilizer generators (rows n..2n-1 of the tableau).
    std::vector<SignedPauli> stabilizers() const;

   private:
    size_t n_;
    // Rows 0..n-1 destabilizers, n..2n-1 stabilizers, 2n scratch.
    std::vector<std::vector<uint8_t>> x_;
    std::vector<std::vector<uint8_t>> z_;
    std::vector<uint8_t> r_;

    void rowsum(size_t h, size_t i);
    void rowcopy(size_t dst, size_t src);
};

}  // namespace qecstab

#endif
