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

#include "qecstab/codes.h"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace qecstab {

namespace {

bool symplectic_product(const BitVector &a, const BitVector &b, size_t n) {
    bool acc = false;
    for (size_t j = 0; j < n; j++) {
        acc ^= (a[j] && b[n + j]) != (a[n + j] && b[j]);
    }
    return acc;
}

PauliOperator pauli_from_symplectic(const BitVector &v, size_t n) {
    PauliOperator p(n);
    for (size_t j = 0; j < n; j++) {
        p.x.set(j, v[j]);
        p.z.set(j, v[n + j]);
    }
    return p;
}

/// Detects the classical-check structure of a CSS code: every row is pure X or pure Z, and the X
/// rows span the same space as the Z rows.
std::optional<BitMatrix> detect_css(const BitMatrix &hx, const BitMatrix &hz) {
    BitMatrix x_rows(0, hx.num_cols());
    BitMatrix z_rows(0, hz.num_cols());
    for (size_t r = 0; r < hx.num_rows(); r++) {
        bool has_x = hx.row(r).any();
        bool has_z = hz.row(r).any();
        if (has_x && has_z) {
            return std::nullopt;
        }
        if (has_x) {
            x_rows.append_row(hx.row(r));
        } else if (has_z) {
            z_rows.append_row(hz.row(r));
        }
    }
    if (x_rows.num_rows() == 0) {
        return std::nullopt;
    }
    RowSpace xs(x_rows);
    RowSpace zs(z_rows);
    if (xs.dimension() != zs.dimension()) {
        return std::nullopt;
    }
    for (const auto &r : z_rows.rows()) {
        if (!xs.contains(r)) {
            return std::nullopt;
        }
    }
    return x_rows;
}

}  // namespace

void ClassicalCode::validate() const {
    if (parity_check.num_cols() != n) {
        throw std::invalid_argument("classical code " + name + ": check matrix width differs from n");
    }
    if (k > n || rank(parity_check) != n - k) {
        throw std::invalid_argument("classical code " + name + ": rank of check matrix is not n - k");
    }
}

ClassicalCode hamming7() {
    ClassicalCode c{"hamming7", 7, 4, BitMatrix::from_rows({"1110100", "0111010", "0011101"})};
    c.validate();
    return c;
}

ClassicalCode golay23() {
    const size_t n = 23;
    const size_t k = 12;
    BitVector g(n);
    for (size_t power : {0, 1, 5, 6, 7, 9, 11}) {
        g.set(power, true);
    }
    BitMatrix generator(0, n);
    for (size_t shift = 0; shift < k; shift++) {
        BitVector row(n);
        for (size_t j = 0; j + shift < n; j++) {
            if (g[j]) {
                row.set(j + shift, true);
            }
        }
        generator.append_row(row);
    }
    ClassicalCode c{"golay23", n, k, nullspace_basis(generator)};
    c.validate();
    return c;
}

ClassicalCode classical_code_by_name(std::string_view name) {
    if (name == "hamming7") {
        return hamming7();
    }
    if (name == "golay23") {
        return golay23();
    }
    throw std::invalid_argument("unknown classical code '" + std::string(name) + "' (known: hamming7, golay23)");
}

SignedPauli StabilizerCode::generator(size_t index) const {
    return SignedPauli(PauliOperator(hx.row(index), hz.row(index)), false);
}

BitMatrix StabilizerCode::stabilizer_matrix() const {
    return hstack(hx, hz);
}

bool StabilizerCode::in_stabilizer_group(const PauliOperator &p) const {
    return RowSpace(stabilizer_matrix()).contains(p.symplectic());
}

bool StabilizerCode::is_nontrivial_logical(const PauliOperator &p) const {
    return commutation_syndrome(*this, p).none() && !in_stabilizer_group(p);
}

void StabilizerCode::validate() const {
    if (hx.num_cols() != n || hz.num_cols() != n || hx.num_rows() != hz.num_rows()) {
        throw std::invalid_argument("code " + name + ": Hx and Hz must both be (generators x n)");
    }
    for (size_t a = 0; a < num_generators(); a++) {
        for (size_t b = a + 1; b < num_generators(); b++) {
            if (!generator(a).commutes_with(generator(b))) {
                std::stringstream ss;
                ss << "code " << name << ": generators " << a << " and " << b << " do not commute";
                throw std::invalid_argument(ss.str());
            }
        }
    }
    if (rank(stabilizer_matrix()) + k != n) {
        throw std::invalid_argument("code " + name + ": rank of (Hx|Hz) is not n - k");
    }
}

std::string StabilizerCode::parameters() const {
    std::stringstream ss;
    ss << "[[" << n << "," << k << "," << d << "]]";
    return ss.str();
}

bool StabilizerCode::operator==(const StabilizerCode &other) const {
    return n == other.n && k == other.k && d == other.d && hx == other.hx && hz == other.hz;
}

StabilizerCode make_stabilizer_code(std::string name, BitMatrix hx, BitMatrix hz, std::optional<size_t> distance) {
    StabilizerCode code;
    code.name = std::move(name);
    code.n = hx.num_cols();
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    if (code.hz.num_cols() != code.n || code.hz.num_rows() != code.hx.num_rows()) {
        throw std::invalid_argument("code " + code.name + ": Hx and Hz have different shapes");
    }
    size_t r = rank(code.stabilizer_matrix());
    if (r > code.n) {
        throw std::invalid_argument("code " + code.name + ": more independent generators than qubits");
    }
    code.k = code.n - r;
    code.validate();
    code.css_check = detect_css(code.hx, code.hz);
    if (code.n <= 12 && code.k > 0) {
        size_t found = distance_bruteforce(code);
        if (distance.has_value() && *distance != found) {
            std::stringstream ss;
            ss << "code " << code.name << ": declared distance " << *distance << " but enumeration finds " << found;
            throw std::invalid_argument(ss.str());
        }
        code.d = found;
    } else if (distance.has_value()) {
        code.d = *distance;
    } else if (code.k > 0) {
        throw std::invalid_argument("code " + code.name + ": distance must be supplied when n > 12");
    }
    code.t = code.d == 0 ? 0 : (code.d - 1) / 2;
    return code;
}

StabilizerCode five_qubit_code() {
    return make_stabilizer_code(
        "five_qubit",
        BitMatrix::from_rows({"11000", "01100", "00110", "00011"}),
        BitMatrix::from_rows({"00101", "10010", "01001", "10100"}),
        3);
}

StabilizerCode css_from_classical(const ClassicalCode &c, std::optional<size_t> distance) {
    c.validate();
    if (!is_self_orthogonal(c.parity_check)) {
        throw std::invalid_argument(
            "classical code " + c.name + " is not dual-containing: its parity checks are not mutually orthogonal");
    }
    if (2 * c.k < c.n) {
        throw std::invalid_argument("classical code " + c.name + " gives 2k_c - n < 0 logical qubits");
    }
    const BitMatrix &h = c.parity_check;
    BitMatrix zeros(h.num_rows(), c.n);
    // X generators first, then Z generators; both copies of the classical checks.
    BitMatrix hx = vstack(h, zeros);
    BitMatrix hz = vstack(zeros, h);
    std::string name = c.name == "hamming7" ? "steane7" : c.name;
    StabilizerCode code = make_stabilizer_code(name, std::move(hx), std::move(hz), distance);
    code.css_check = h;
    return code;
}

StabilizerCode code_by_name(std::string_view name) {
    if (name == "five_qubit") {
        return five_qubit_code();
    }
    if (name == "steane7") {
        return css_from_classical(hamming7());
    }
    if (name == "golay23") {
        return css_from_classical(golay23(), 7);
    }
    throw std::invalid_argument("unknown code '" + std::string(name) + "' (known: five_qubit, steane7, golay23)");
}

std::vector<std::string> registry_names() {
    return {"five_qubit", "steane7", "golay23"};
}

Syndrome commutation_syndrome(const StabilizerCode &code, const PauliOperator &e) {
    if (e.num_qubits() != code.n) {
        std::stringstream ss;
        ss << "commutation_syndrome: error acts on " << e.num_qubits() << " qubits but the code has " << code.n;
        throw std::invalid_argument(ss.str());
    }
    Syndrome s(code.num_generators());
    for (size_t i = 0; i < code.num_generators(); i++) {
        if (dot(code.hx.row(i), e.z) != dot(code.hz.row(i), e.x)) {
            s.flip(i);
        }
    }
    return s;
}

void for_each_pauli_of_weight(size_t n, size_t weight, const std::function<bool(const PauliOperator &)> &body) {
    if (weight > n) {
        return;
    }
    std::vector<size_t> support(weight);
    for (size_t k = 0; k < weight; k++) {
        support[k] = k;
    }
    PauliOperator p(n);
    while (true) {
        // Base-3 counter over the support: 0 -> X, 1 -> Z, 2 -> Y.
        std::vector<int> digits(weight, 0);
        while (true) {
            p.x.clear();
            p.z.clear();
            for (size_t k = 0; k < weight; k++) {
                p.x.set(support[k], digits[k] != 1);
                p.z.set(support[k], digits[k] != 0);
            }
            if (!body(p)) {
                return;
            }
            size_t pos = weight;
            while (pos > 0 && digits[pos - 1] == 2) {
                digits[pos - 1] = 0;
                pos--;
            }
            if (pos == 0) {
                break;
            }
            digits[pos - 1]++;
        }
        // Next combination.
        size_t pos = weight;
        while (pos > 0 && support[pos - 1] == n - weight + pos - 1) {
            pos--;
        }
        if (pos == 0) {
            return;
        }
        support[pos - 1]++;
        for (size_t k = pos; k < weight; k++) {
            support[k] = support[k - 1] + 1;
        }
    }
}

size_t distance_bruteforce(const StabilizerCode &code) {
    if (code.n > 12) {
        throw std::invalid_argument("distance_bruteforce: n = " + std::to_string(code.n) + " exceeds the limit of 12");
    }
    if (code.k == 0) {
        throw std::invalid_argument("distance_bruteforce: code encodes no logical qubits");
    }
    RowSpace stabilizers(code.stabilizer_matrix());
    for (size_t w = 1; w <= code.n; w++) {
        bool found = false;
        for_each_pauli_of_weight(code.n, w, [&](const PauliOperator &p) {
            if (commutation_syndrome(code, p).none() && !stabilizers.contains(p.symplectic())) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) {
            return w;
        }
    }
    throw std::logic_error("distance_bruteforce: no logical operator found");
}

LogicalOperators logical_operators(const StabilizerCode &code) {
    const size_t n = code.n;
    std::vector<BitVector> candidates;
    if (code.is_css()) {
        BitMatrix classical = nullspace_basis(*code.css_check);
        BitVector zeros(n);
        for (const auto &c : classical.rows()) {
            candidates.push_back(concat(c, zeros));
        }
        for (const auto &c : classical.rows()) {
            candidates.push_back(concat(zeros, c));
        }
    } else {
        // Normalizer: v with <hz_i, v_x> + <hx_i, v_z> = 0 for all i.
        BitMatrix normalizer = nullspace_basis(hstack(code.hz, code.hx));
        candidates = normalizer.rows();
    }
    RowSpace span(code.stabilizer_matrix());
    std::vector<BitVector> pool;
    for (const auto &c : candidates) {
        if (span.insert(c)) {
            pool.push_back(c);
        }
    }
    LogicalOperators result;
    while (!pool.empty()) {
        BitVector a = pool.front();
        pool.erase(pool.begin());
        size_t partner = pool.size();
        for (size_t k = 0; k < pool.size(); k++) {
            if (symplectic_product(a, pool[k], n)) {
                partner = k;
                break;
            }
        }
        if (partner == pool.size()) {
            throw std::logic_error("logical_operators: symplectic pairing failed");
        }
        BitVector b = pool[partner];
        pool.erase(pool.begin() + partner);
        for (auto &v : pool) {
            bool with_b = symplectic_product(v, b, n);
            bool with_a = symplectic_product(v, a, n);
            if (with_b) {
                v ^= a;
            }
            if (with_a) {
                v ^= b;
            }
        }
        result.xs.push_back(pauli_from_symplectic(a, n));
        result.zs.push_back(pauli_from_symplectic(b, n));
    }
    if (result.xs.size() != code.k) {
        throw std::logic_error("logical_operators: expected k logical pairs");
    }
    return result;
}

StabilizerCode parse_code_file(std::string_view text) {
    std::vector<BitVector> x_rows;
    std::vector<BitVector> z_rows;
    std::vector<size_t> line_of_row;
    std::optional<size_t> declared_n;
    std::optional<size_t> declared_k;
    std::optional<size_t> declared_d;
    std::string name = "custom";
    static const std::regex header(R"(\[\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\]\s*(\S*))");

    size_t line_number = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string line(text.substr(start, end - start));
        start = end + 1;
        line_number++;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        line = line.substr(first);
        if (line[0] == '#') {
            std::smatch m;
            if (std::regex_search(line, m, header)) {
                declared_n = std::stoul(m[1]);
                declared_k = std::stoul(m[2]);
                declared_d = std::stoul(m[3]);
                if (m[4].length() > 0) {
                    name = m[4];
                }
            }
        } else {
            size_t bar = line.find('|');
            if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": expected exactly one '|' separating X and Z halves");
            }
            std::string xs = line.substr(0, bar);
            std::string zs = line.substr(bar + 1);
            if (xs.size() != zs.size()) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": X half has " + std::to_string(xs.size()) + " bits but Z half has " + std::to_string(zs.size()));
            }
            if (!x_rows.empty() && xs.size() != x_rows.front().size()) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": row length differs from earlier rows");
            }
            try {
                x_rows.push_back(BitVector::from_string(xs));
                z_rows.push_back(BitVector::from_string(zs));
            } catch (const std::invalid_argument &) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": rows may contain only '0' and '1'");
            }
            line_of_row.push_back(line_number);
        }
        if (end == text.size()) {
            break;
        }
    }
    if (x_rows.empty()) {
        throw std::invalid_argument("code file contains no generator rows");
    }
    size_t n = x_rows.front().size();
    for (size_t a = 0; a < x_rows.size(); a++) {
        for (size_t b = a + 1; b < x_rows.size(); b++) {
            if (dot(x_rows[a], z_rows[b]) != dot(z_rows[a], x_rows[b])) {
                throw std::invalid_argument("generators on lines " + std::to_string(line_of_row[a]) + " and " + std::to_string(line_of_row[b]) + " do not commute");
            }
        }
    }
    if (declared_n.has_value() && *declared_n != n) {
        throw std::invalid_argument("header declares n = " + std::to_string(*declared_n) + " but rows have " + std::to_string(n) + " qubits");
    }
    StabilizerCode code = make_stabilizer_code(
        name, BitMatrix::from_rows(std::move(x_rows), n), BitMatrix::from_rows(std::move(z_rows), n), declared_d);
    if (declared_k.has_value() && *declared_k != code.k) {
        throw std::invalid_argument("header declares k = " + std::to_string(*declared_k) + " but the generators give k = " + std::to_string(code.k));
    }
    return code;
}

std::string emit_code_file(const StabilizerCode &code) {
    std::stringstream ss;
    ss << "# " << code.parameters() << " " << code.name << "\n";
    for (size_t r = 0; r < code.num_generators(); r++) {
        ss << code.hx.row(r).to_string() << "|" << code.hz.row(r).to_string() << "\n";
    }
    return ss.str();
}

}  // namespace qecstab
