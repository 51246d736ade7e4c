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

#include <stdexcept>

namespace qecstab {

namespace {

Circuit layout(size_t data, size_t ancilla, size_t verifiers) {
    Circuit c;
    c.add_register("data", data);
    c.add_register("ancilla", ancilla);
    c.add_register("verify", verifiers);
    return c;
}

Circuit flat(size_t width) {
    Circuit c;
    c.add_register("q", width);
    return c;
}

std::vector<size_t> independent_rows(const BitMatrix &m) {
    RowSpace span;
    std::vector<size_t> rows;
    for (size_t r = 0; r < m.num_rows(); r++) {
        if (span.insert(m.row(r))) {
            rows.push_back(r);
        }
    }
    return rows;
}

std::vector<uint32_t> register_qubits(const Register &r) {
    std::vector<uint32_t> out(r.size);
    for (size_t k = 0; k < r.size; k++) {
        out[k] = r[k];
    }
    return out;
}

SignedPauli pure_pauli(const BitVector &support, char kind) {
    PauliOperator p(support.size());
    if (kind == 'X') {
        p.x = support;
    } else {
        p.z = support;
    }
    return SignedPauli(std::move(p));
}

// Controlled-P from `control` onto `target`, one two-qubit gate per qubit.
void controlled_pauli(Circuit &c, uint32_t control, uint32_t target, char p) {
    switch (p) {
        case 'X':
            c.cnot(control, target);
            break;
        case 'Z':
            c.cz(control, target);
            break;
        case 'Y':
            c.phase_dag(target);
            c.cnot(control, target);
            c.phase(target);
            break;
        default:
            break;
    }
}

void css_zero_gates(const BitMatrix &h, const std::vector<uint32_t> &targets, Circuit &c) {
    auto reduced = rref(h);
    for (size_t r = 0; r < reduced.pivots.size(); r++) {
        c.hadamard(targets[reduced.pivots[r]]);
    }
    for (size_t r = 0; r < reduced.pivots.size(); r++) {
        size_t p = reduced.pivots[r];
        for (size_t j = 0; j < h.num_cols(); j++) {
            if (j != p && reduced.reduced.get(r, j)) {
                c.cnot(targets[p], targets[j]);
            }
        }
    }
}

void require_css(const StabilizerCode &code) {
    if (!code.is_css()) {
        throw std::invalid_argument("code " + code.name + " is not a CSS code; the css style needs X and Z checks from one classical code");
    }
}

// The pieces common to both CSS rounds: prep of an n-qubit ancilla, verification, and the parity rows.
ExtractionRound css_round(const StabilizerCode &code, bool x_errors, VerificationLevel level) {
    const BitMatrix &h = *code.css_check;
    std::vector<size_t> word_rows = independent_rows(h);
    BitMatrix classical_code = nullspace_basis(h);
    size_t num_checks = 0;
    if (level != VerificationLevel::none) {
        num_checks += word_rows.size();
    }
    if (level == VerificationLevel::full) {
        num_checks += classical_code.num_rows();
    }

    ExtractionRound round;
    round.name = x_errors ? "css_x" : "css_z";
    round.num_data = code.n;
    round.num_ancilla = code.n;
    round.num_verifiers = num_checks;
    round.prep = layout(code.n, code.n, num_checks);
    round.interact = layout(code.n, code.n, num_checks);
    const Register &data = round.prep.reg("data");
    const Register &anc = round.prep.reg("ancilla");
    std::vector<uint32_t> anc_qubits = register_qubits(anc);

    for (uint32_t q : anc_qubits) {
        round.prep.prep_zero(q);
    }
    css_zero_gates(h, anc_qubits, round.prep);
    if (x_errors) {
        // Encoded zero followed by the transversal Hadamard: the sum over all classical codewords.
        for (uint32_t q : anc_qubits) {
            round.prep.hadamard(q);
        }
    }

    // X-round ancilla is stabilized by Z^h (word checks) and X^c; the Z-round one by X^h and Z^c.
    char word_kind = x_errors ? 'Z' : 'X';
    char guard_kind = x_errors ? 'X' : 'Z';
    std::vector<SignedPauli> checks;
    if (level != VerificationLevel::none) {
        for (size_t r : word_rows) {
            checks.push_back(pure_pauli(h.row(r), word_kind));
        }
    }
    if (level == VerificationLevel::full) {
        for (const auto &c : classical_code.rows()) {
            checks.push_back(pure_pauli(c, guard_kind));
        }
    }
    auto verification = synth_verification(checks, anc_qubits, register_qubits(round.prep.reg("verify")), round.prep.num_qubits());
    round.verify = layout(code.n, code.n, num_checks);
    round.verify.append(verification.circuit);
    round.verify_expected = verification.expected;

    for (size_t j = 0; j < code.n; j++) {
        if (x_errors) {
            round.interact.cnot(data[j], anc[j]);
        } else {
            round.interact.cnot(anc[j], data[j]);
        }
    }
    for (size_t j = 0; j < code.n; j++) {
        if (x_errors) {
            round.interact.measure_z(anc[j], "w" + std::to_string(j));
        } else {
            round.interact.measure_x(anc[j], "w" + std::to_string(j));
        }
    }

    // Generators of the matching pure type are evaluated directly on the measured word.
    round.parity = BitMatrix(0, code.n);
    for (size_t i = 0; i < code.num_generators(); i++) {
        const BitVector &own = x_errors ? code.hz.row(i) : code.hx.row(i);
        const BitVector &other = x_errors ? code.hx.row(i) : code.hz.row(i);
        if (own.any() && other.none()) {
            round.parity.append_row(own);
            round.syndrome_bits.push_back(i);
        }
    }
    return round;
}

}  // namespace

std::string_view style_name(NetworkStyle style) {
    switch (style) {
        case NetworkStyle::direct:
            return "direct";
        case NetworkStyle::ancilla:
            return "ancilla";
        case NetworkStyle::css:
            return "css";
    }
    return "?";
}

NetworkStyle parse_style(std::string_view text) {
    if (text == "direct") {
        return NetworkStyle::direct;
    }
    if (text == "ancilla") {
        return NetworkStyle::ancilla;
    }
    if (text == "css") {
        return NetworkStyle::css;
    }
    throw std::invalid_argument("unknown network style '" + std::string(text) + "' (direct, ancilla, css)");
}

std::string_view verification_name(VerificationLevel level) {
    switch (level) {
        case VerificationLevel::none:
            return "none";
        case VerificationLevel::parity_checks:
            return "parity_checks";
        case VerificationLevel::full:
            return "full";
    }
    return "?";
}

VerificationLevel parse_verification(std::string_view text) {
    if (text == "none") {
        return VerificationLevel::none;
    }
    if (text == "parity_checks") {
        return VerificationLevel::parity_checks;
    }
    if (text == "full") {
        return VerificationLevel::full;
    }
    throw std::invalid_argument("unknown verification level '" + std::string(text) + "' (none, parity_checks, full)");
}

VerificationCircuit synth_verification(
    const std::vector<SignedPauli> &checks,
    const std::vector<uint32_t> &targets,
    const std::vector<uint32_t> &verifiers,
    size_t width) {
    if (verifiers.size() < checks.size()) {
        throw std::invalid_argument("synth_verification: one verification qubit is needed per check");
    }
    VerificationCircuit out;
    out.circuit = flat(width);
    for (size_t i = 0; i < checks.size(); i++) {
        const SignedPauli &check = checks[i];
        if (check.num_qubits() != targets.size()) {
            throw std::invalid_argument("synth_verification: check width differs from the target register");
        }
        uint32_t v = verifiers[i];
        std::string label = "c" + std::to_string(i);
        out.circuit.prep_zero(v);
        if (check.pauli.x.none()) {
            for (size_t j = 0; j < targets.size(); j++) {
                if (check.pauli.z[j]) {
                    out.circuit.cnot(targets[j], v);
                }
            }
            out.circuit.measure_z(v, label);
        } else {
            out.circuit.hadamard(v);
            for (size_t j = 0; j < targets.size(); j++) {
                controlled_pauli(out.circuit, v, targets[j], check.pauli.at(j));
            }
            out.circuit.measure_x(v, label);
        }
        out.expected.push_back(check.negative);
    }
    return out;
}

size_t ExtractionRound::couplings() const {
    return interact.count_couplings(interact.reg("data"), interact.reg("ancilla"));
}

Circuit ExtractionRound::full() const {
    Circuit c = layout(num_data, num_ancilla, num_verifiers);
    c.append(prep);
    c.append(verify);
    c.append(interact);
    return c;
}

Circuit ExtractionRound::without_verification() const {
    Circuit c;
    c.add_register("data", num_data);
    c.add_register("ancilla", num_ancilla);
    // Verifier qubits are never touched by prep or interact; map them anywhere.
    std::vector<uint32_t> map(width(), 0);
    for (uint32_t q = 0; q < num_data + num_ancilla; q++) {
        map[q] = q;
    }
    c.append_mapped(prep, map);
    c.append_mapped(interact, map);
    return c;
}

BitVector ExtractionRound::evaluate(const std::vector<bool> &word) const {
    if (word.size() != parity.num_cols()) {
        throw std::invalid_argument("ExtractionRound::evaluate: word length differs from the parity checks");
    }
    BitVector w(word.size());
    for (size_t k = 0; k < word.size(); k++) {
        w.set(k, word[k]);
    }
    return mat_vec_syndrome(parity, w);
}

ExtractionRound synth_direct_network(const StabilizerCode &code) {
    const size_t m = code.num_generators();
    ExtractionRound round;
    round.name = "direct";
    round.num_data = code.n;
    round.num_ancilla = m;
    round.prep = layout(code.n, m, 0);
    round.verify = layout(code.n, m, 0);
    round.interact = layout(code.n, m, 0);
    const Register &data = round.prep.reg("data");
    const Register &anc = round.prep.reg("ancilla");
    for (size_t i = 0; i < m; i++) {
        round.prep.prep_zero(anc[i]);
        round.prep.hadamard(anc[i]);
    }
    for (size_t i = 0; i < m; i++) {
        PauliOperator g = code.generator(i).pauli;
        for (size_t j = 0; j < code.n; j++) {
            uint32_t d = data[j];
            switch (g.at(j)) {
                case 'X':
                    round.interact.cnot(anc[i], d);
                    break;
                case 'Z':
                    round.interact.hadamard(d);
                    round.interact.cnot(anc[i], d);
                    round.interact.hadamard(d);
                    break;
                case 'Y':
                    round.interact.phase_dag(d);
                    round.interact.cnot(anc[i], d);
                    round.interact.phase(d);
                    break;
                default:
                    break;
            }
        }
        round.interact.hadamard(anc[i]);
        round.interact.measure_z(anc[i], "s" + std::to_string(i));
    }
    round.parity = BitMatrix::identity(m);
    for (size_t i = 0; i < m; i++) {
        round.syndrome_bits.push_back(i);
    }
    return round;
}

ExtractionRound synth_ancilla_network(const StabilizerCode &code, VerificationLevel level) {
    const size_t n = code.n;
    std::vector<size_t> word_rows = independent_rows(code.stabilizer_matrix());
    // Normalizer vectors (lx|lz): hz.lx + hx.lz = 0 for every generator.
    BitMatrix normalizer = nullspace_basis(hstack(code.hz, code.hx));

    // Ancilla qubit j < n is u_j (X-measured, controls a cnot onto data j); n + j is v_j
    // (Z-measured, target of a cnot from data j).
    auto word_check = [&](size_t i) {
        SignedPauli a(2 * n);
        size_t ys = 0;
        for (size_t j = 0; j < n; j++) {
            bool x = code.hx.get(i, j);
            bool z = code.hz.get(i, j);
            a.pauli.x.set(j, x);
            a.pauli.x.set(n + j, x);
            a.pauli.z.set(n + j, z);
            ys += x && z;
        }
        a.negative = ys % 2 == 1;
        return a;
    };
    auto guard = [&](const BitVector &l) {
        SignedPauli t(2 * n);
        for (size_t j = 0; j < n; j++) {
            t.pauli.x.set(n + j, l[j]);
            t.pauli.z.set(j, l[n + j]);
        }
        return t;
    };

    std::vector<SignedPauli> state_generators;
    std::vector<SignedPauli> checks;
    for (size_t i : word_rows) {
        state_generators.push_back(word_check(i));
    }
    for (const auto &l : normalizer.rows()) {
        state_generators.push_back(guard(l));
    }
    if (level != VerificationLevel::none) {
        checks.insert(checks.end(), state_generators.begin(), state_generators.begin() + word_rows.size());
    }
    if (level == VerificationLevel::full) {
        checks.insert(checks.end(), state_generators.begin() + word_rows.size(), state_generators.end());
    }

    ExtractionRound round;
    round.name = "ancilla";
    round.num_data = n;
    round.num_ancilla = 2 * n;
    round.num_verifiers = checks.size();
    round.prep = layout(n, 2 * n, checks.size());
    round.verify = layout(n, 2 * n, checks.size());
    round.interact = layout(n, 2 * n, checks.size());
    const Register &data = round.prep.reg("data");
    const Register &anc = round.prep.reg("ancilla");
    std::vector<uint32_t> anc_qubits = register_qubits(anc);

    for (uint32_t q : anc_qubits) {
        round.prep.prep_zero(q);
    }
    round.prep.append_mapped(synth_stabilizer_state(state_generators), anc_qubits);

    auto verification = synth_verification(checks, anc_qubits, register_qubits(round.prep.reg("verify")), round.prep.num_qubits());
    round.verify.append(verification.circuit);
    round.verify_expected = verification.expected;

    for (size_t j = 0; j < n; j++) {
        round.interact.cnot(data[j], anc[n + j]);
        round.interact.cnot(anc[j], data[j]);
    }
    for (size_t j = 0; j < n; j++) {
        round.interact.measure_x(anc[j], "u" + std::to_string(j));
    }
    for (size_t j = 0; j < n; j++) {
        round.interact.measure_z(anc[n + j], "v" + std::to_string(j));
    }
    round.parity = code.stabilizer_matrix();
    for (size_t i = 0; i < code.num_generators(); i++) {
        round.syndrome_bits.push_back(i);
    }
    return round;
}

std::pair<ExtractionRound, ExtractionRound> synth_css_networks(const StabilizerCode &code, VerificationLevel level) {
    require_css(code);
    return {css_round(code, true, level), css_round(code, false, level)};
}

RecoveryNetwork synth_recovery_network(const StabilizerCode &code, NetworkStyle style, VerificationLevel level) {
    RecoveryNetwork network{style, {}};
    switch (style) {
        case NetworkStyle::direct:
            network.rounds.push_back(synth_direct_network(code));
            break;
        case NetworkStyle::ancilla:
            network.rounds.push_back(synth_ancilla_network(code, level));
            break;
        case NetworkStyle::css: {
            auto [x_round, z_round] = synth_css_networks(code, level);
            network.rounds.push_back(std::move(x_round));
            network.rounds.push_back(std::move(z_round));
            break;
        }
    }
    return network;
}

Circuit synth_encoder(const StabilizerCode &code) {
    if (code.is_css()) {
        Circuit c = flat(code.n);
        std::vector<uint32_t> qubits = register_qubits(c.reg("q"));
        css_zero_gates(*code.css_check, qubits, c);
        return c;
    }
    std::vector<SignedPauli> generators;
    for (size_t i : independent_rows(code.stabilizer_matrix())) {
        generators.push_back(code.generator(i));
    }
    for (const auto &z : logical_operators(code).zs) {
        generators.push_back(SignedPauli(z));
    }
    return synth_stabilizer_state(generators);
}

Circuit synth_logical_basis_state(const StabilizerCode &code, const BitVector &logical_bits) {
    if (logical_bits.size() != code.k) {
        throw std::invalid_argument("synth_logical_basis_state: need one bit per logical qubit");
    }
    Circuit c = synth_encoder(code);
    auto logical = logical_operators(code);
    for (size_t i = 0; i < code.k; i++) {
        if (logical_bits[i]) {
            for (size_t j = 0; j < code.n; j++) {
                c.pauli(uint32_t(j), logical.xs[i].at(j));
            }
        }
    }
    return c;
}

Circuit synth_css_zero(const StabilizerCode &code, const std::vector<uint32_t> &targets, size_t width) {
    require_css(code);
    if (targets.size() != code.n) {
        throw std::invalid_argument("synth_css_zero: need n target qubits");
    }
    Circuit c = flat(width);
    for (uint32_t q : targets) {
        c.prep_zero(q);
    }
    css_zero_gates(*code.css_check, targets, c);
    return c;
}

Circuit transversal_cnot(size_t n, uint32_t a_start, uint32_t b_start, size_t width) {
    if (a_start + n > width || b_start + n > width) {
        throw std::invalid_argument("transversal_cnot: block exceeds the circuit width");
    }
    if ((a_start < b_start + n) && (b_start < a_start + n)) {
        throw std::invalid_argument("transversal_cnot: blocks overlap");
    }
    Circuit c = flat(width);
    for (uint32_t j = 0; j < n; j++) {
        c.cnot(a_start + j, b_start + j);
    }
    return c;
}

}  // namespace qecstab
