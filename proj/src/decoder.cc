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

#include "qecstab/decoder.h"

#include <sstream>
#include <stdexcept>

namespace qecstab {

namespace {

// Calls body(support) for every size-w subset of {0..n-1} in lexicographic order.
template <typename Body>
void for_each_subset(size_t n, size_t w, Body body) {
    std::vector<size_t> support(w);
    for (size_t k = 0; k < w; k++) {
        support[k] = k;
    }
    if (w > n) {
        return;
    }
    while (true) {
        if (!body(support)) {
            return;
        }
        size_t pos = w;
        while (pos > 0 && support[pos - 1] == n - w + pos - 1) {
            pos--;
        }
        if (pos == 0) {
            return;
        }
        support[pos - 1]++;
        for (size_t k = pos; k < w; k++) {
            support[k] = support[k - 1] + 1;
        }
    }
}

bool has_product_layout(const StabilizerCode &code) {
    if (!code.css_check.has_value()) {
        return false;
    }
    const BitMatrix &h = *code.css_check;
    BitMatrix zeros(h.num_rows(), code.n);
    return code.hx == vstack(h, zeros) && code.hz == vstack(zeros, h);
}

}  // namespace

std::vector<std::optional<BitVector>> classical_coset_leaders(const BitMatrix &h) {
    size_t m = h.num_rows();
    size_t n = h.num_cols();
    if (m > 24) {
        throw std::invalid_argument("classical_coset_leaders: at most 24 checks supported");
    }
    std::vector<uint64_t> column_syndrome(n, 0);
    for (size_t j = 0; j < n; j++) {
        for (size_t i = 0; i < m; i++) {
            column_syndrome[j] |= uint64_t(h.get(i, j)) << i;
        }
    }
    std::vector<std::optional<BitVector>> leaders(size_t{1} << m);
    size_t reachable = size_t{1} << rank(h);
    size_t found = 0;
    for (size_t w = 0; w <= n && found < reachable; w++) {
        for_each_subset(n, w, [&](const std::vector<size_t> &support) {
            uint64_t s = 0;
            BitVector v(n);
            for (size_t j : support) {
                s ^= column_syndrome[j];
                v.set(j, true);
            }
            auto &slot = leaders[s];
            if (!slot.has_value()) {
                slot = std::move(v);
                found++;
            } else if (slot->weight() == w && v < *slot) {
                slot = std::move(v);
            }
            return true;
        });
    }
    return leaders;
}

uint64_t DecoderTable::key(const Syndrome &s) {
    return s.to_uint64();
}

DecoderTable DecoderTable::build(const StabilizerCode &code) {
    DecoderTable table;
    table.n_ = code.n;
    table.m_ = code.num_generators();
    if (table.m_ > 64) {
        throw std::invalid_argument("DecoderTable: more than 64 generators");
    }

    if (has_product_layout(code)) {
        const BitMatrix &h = *code.css_check;
        table.product_ = true;
        table.classical_checks_ = h.num_rows();
        auto leaders = classical_coset_leaders(h);
        RowSpace dual(h);
        // Weight <= t classical errors must be distinguishable modulo the dual code.
        for (size_t w = 1; w <= code.t; w++) {
            for_each_subset(code.n, w, [&](const std::vector<size_t> &support) {
                BitVector v(code.n);
                for (size_t j : support) {
                    v.set(j, true);
                }
                const auto &leader = *leaders[mat_vec_syndrome(h, v).to_uint64()];
                if (!dual.contains(leader ^ v)) {
                    throw std::invalid_argument(
                        "code " + code.name + " is not " + std::to_string(code.t) +
                        "-error-correcting: two inequivalent low-weight errors share a syndrome");
                }
                return true;
            });
        }
        table.leaders_.resize(leaders.size(), BitVector(code.n));
        table.leader_known_.resize(leaders.size(), false);
        for (size_t s = 0; s < leaders.size(); s++) {
            if (leaders[s].has_value()) {
                table.leaders_[s] = *leaders[s];
                table.leader_known_[s] = true;
            }
        }
        return table;
    }

    RowSpace stabilizers(code.stabilizer_matrix());
    std::unordered_map<uint64_t, size_t> weight_of;
    for (size_t w = 0; w <= std::min(code.t + 1, code.n); w++) {
        for_each_pauli_of_weight(code.n, w, [&](const PauliOperator &p) {
            uint64_t s = key(commutation_syndrome(code, p));
            auto it = table.table_.find(s);
            if (it == table.table_.end()) {
                table.table_.emplace(s, p);
                weight_of[s] = w;
                return true;
            }
            if (w <= code.t && !stabilizers.contains((it->second * p).symplectic())) {
                std::stringstream ss;
                ss << "code " << code.name << " is not " << code.t << "-error-correcting: " << it->second.to_string()
                   << " and " << p.to_string() << " share a syndrome";
                throw std::invalid_argument(ss.str());
            }
            if (weight_of[s] == w && p < it->second) {
                it->second = p;
            }
            return true;
        });
    }
    return table;
}

std::optional<PauliOperator> DecoderTable::lookup(const Syndrome &s) const {
    if (s.size() != m_) {
        std::stringstream ss;
        ss << "DecoderTable: syndrome has " << s.size() << " bits, expected " << m_;
        throw std::invalid_argument(ss.str());
    }
    uint64_t k = key(s);
    if (product_) {
        auto o = overrides_.find(k);
        if (o != overrides_.end()) {
            return o->second;
        }
        uint64_t mask = (uint64_t{1} << classical_checks_) - 1;
        // The first half comes from the X-type generators, which see Z errors.
        uint64_t z_error_bits = k & mask;
        uint64_t x_error_bits = (k >> classical_checks_) & mask;
        if (!leader_known_[z_error_bits] || !leader_known_[x_error_bits]) {
            return std::nullopt;
        }
        return PauliOperator(leaders_[x_error_bits], leaders_[z_error_bits]);
    }
    auto it = table_.find(k);
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

PauliOperator DecoderTable::correction(const Syndrome &s) const {
    auto found = lookup(s);
    return found.has_value() ? *found : PauliOperator(n_);
}

size_t DecoderTable::size() const {
    if (!product_) {
        return table_.size();
    }
    size_t known = 0;
    for (bool b : leader_known_) {
        known += b;
    }
    return known * known;
}

void DecoderTable::set_entry(const Syndrome &s, const PauliOperator &correction) {
    if (s.size() != m_ || correction.num_qubits() != n_) {
        throw std::invalid_argument("DecoderTable::set_entry: size mismatch");
    }
    if (product_) {
        overrides_[key(s)] = correction;
    } else {
        table_[key(s)] = correction;
    }
}

}  // namespace qecstab
