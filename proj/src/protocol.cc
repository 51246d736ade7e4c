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

#include "qecstab/protocol.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "qecstab/statevector.h"

namespace qecstab {

namespace {

// Runs body(i) for i in [0, count) over `threads` workers, each taking a contiguous block.
template <typename Body>
void parallel_for(uint64_t count, size_t threads, const Body &body) {
    threads = std::max<size_t>(1, std::min<uint64_t>(threads, std::max<uint64_t>(count, 1)));
    if (threads == 1) {
        for (uint64_t i = 0; i < count; i++) {
            body(size_t{0}, i);
        }
        return;
    }
    std::vector<std::thread> workers;
    for (size_t w = 0; w < threads; w++) {
        uint64_t lo = count * w / threads;
        uint64_t hi = count * (w + 1) / threads;
        workers.emplace_back([&body, w, lo, hi] {
            for (uint64_t i = lo; i < hi; i++) {
                body(w, i);
            }
        });
    }
    for (auto &t : workers) {
        t.join();
    }
}

// Normalized data amplitudes of the heaviest ancilla basis branch.
StateVector data_branch(const StateVector &joint, size_t n) {
    const size_t low = size_t{1} << n;
    const size_t high = joint.amplitudes().size() / low;
    size_t best = 0;
    double best_weight = -1;
    for (size_t a = 0; a < high; a++) {
        double w = 0;
        for (size_t d = 0; d < low; d++) {
            w += std::norm(joint.amplitude(d + a * low));
        }
        if (w > best_weight) {
            best_weight = w;
            best = a;
        }
    }
    auto first = joint.amplitudes().begin() + std::ptrdiff_t(best * low);
    StateVector out = StateVector::from_amplitudes(std::vector<std::complex<double>>(first, first + std::ptrdiff_t(low)));
    out.normalize();
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void RecoveryConfig::validate() const {
    if (r == 0 || r % 2 == 0) {
        throw std::invalid_argument("r must be odd and at least 1, got " + std::to_string(r));
    }
    if (max_prep_retries < 1) {
        throw std::invalid_argument("max_prep_retries must be at least 1");
    }
}

RecoveryEngine::RecoveryEngine(StabilizerCode code, RecoveryConfig config, size_t num_blocks)
    : code_(std::move(code)), config_(config), num_blocks_(num_blocks) {
    config_.validate();
    if (num_blocks_ != 1 && num_blocks_ != 2) {
        throw std::invalid_argument("RecoveryEngine supports one or two blocks");
    }
    if (num_blocks_ == 2 && !code_.is_css()) {
        throw std::invalid_argument("the two-block step uses a transversal cnot, which needs a CSS code");
    }
    network_ = synth_recovery_network(code_, config_.style, config_.verification);
    decoder_ = DecoderTable::build(code_);
    logical_ = logical_operators(code_);

    size_t ancilla = 0;
    size_t verifiers = 0;
    for (const auto &round : network_.rounds) {
        ancilla = std::max(ancilla, round.num_ancilla);
        verifiers = std::max(verifiers, round.num_verifiers);
    }
    const size_t data = num_blocks_ * code_.n;
    width_ = data + ancilla + verifiers;

    auto system = [&] {
        Circuit c;
        for (size_t b = 0; b < num_blocks_; b++) {
            c.add_register("data" + std::to_string(b), code_.n);
        }
        c.add_register("ancilla", ancilla);
        c.add_register("verify", verifiers);
        return c;
    };
    auto qubit_map = [&](const ExtractionRound &round, size_t block) {
        std::vector<uint32_t> map(round.width());
        for (size_t j = 0; j < round.num_data; j++) {
            map[j] = uint32_t(block * code_.n + j);
        }
        for (size_t k = 0; k < round.num_ancilla; k++) {
            map[round.num_data + k] = uint32_t(data + k);
        }
        for (size_t k = 0; k < round.num_verifiers; k++) {
            map[round.num_data + round.num_ancilla + k] = uint32_t(data + ancilla + k);
        }
        return map;
    };

    interact_.resize(num_blocks_);
    for (const auto &round : network_.rounds) {
        auto map = qubit_map(round, 0);
        prep_.push_back(system());
        prep_.back().append_mapped(round.prep, map);
        verify_.push_back(system());
        verify_.back().append_mapped(round.verify, map);
        expected_.push_back(round.verify_expected);
        for (size_t b = 0; b < num_blocks_; b++) {
            interact_[b].push_back(system());
            interact_[b].back().append_mapped(round.interact, qubit_map(round, b));
        }
    }
    step_ = system();
    if (num_blocks_ == 2) {
        step_.append(transversal_cnot(code_.n, 0, uint32_t(code_.n), width_));
    }
}

PrepOutcome RecoveryEngine::prepare_verified_ancilla(FrameSimulator &sim, size_t round) const {
    PrepOutcome out;
    for (size_t attempt = 0; attempt <= config_.max_prep_retries; attempt++) {
        sim.run(prep_[round]);
        sim.run(verify_[round]);
        // Deviation mode: a zero flip means the check gave its expected value.
        const auto &flips = sim.results();
        if (std::none_of(flips.begin(), flips.end(), [](uint8_t f) { return f != 0; })) {
            out.retries = attempt;
            out.accepted = true;
            return out;
        }
    }
    out.retries = config_.max_prep_retries;
    return out;
}

SyndromeRecord RecoveryEngine::generate_syndrome_once(FrameSimulator &sim, size_t block, size_t round) const {
    SyndromeRecord record;
    record.round = round;
    PrepOutcome prep = prepare_verified_ancilla(sim, round);
    record.prep_retries = prep.retries;
    record.prep_exhausted = !prep.accepted;
    sim.run(interact_[block][round]);
    std::vector<bool> word(sim.results().begin(), sim.results().end());
    record.syndrome = network_.rounds[round].evaluate(word);
    return record;
}

Syndrome RecoveryEngine::expand(size_t round, const BitVector &bits) const {
    const auto &rows = network_.rounds[round].syndrome_bits;
    if (bits.size() != rows.size()) {
        throw std::invalid_argument("expand: wrong number of syndrome bits for the round");
    }
    Syndrome s(code_.num_generators());
    for (size_t k = 0; k < rows.size(); k++) {
        s.set(rows[k], bits[k]);
    }
    return s;
}

BitVector RecoveryEngine::majority(const std::vector<BitVector> &syndromes) {
    if (syndromes.empty()) {
        throw std::invalid_argument("majority of no syndromes");
    }
    BitVector out(syndromes[0].size());
    for (size_t b = 0; b < out.size(); b++) {
        size_t ones = 0;
        for (const auto &s : syndromes) {
            ones += s[b];
        }
        out.set(b, 2 * ones > syndromes.size());
    }
    return out;
}

std::vector<SyndromeRecord> RecoveryEngine::recover(FrameSimulator &sim, size_t block) const {
    std::vector<SyndromeRecord> records;
    for (size_t round = 0; round < network_.rounds.size(); round++) {
        std::vector<BitVector> syndromes;
        for (size_t rep = 0; rep < config_.r; rep++) {
            SyndromeRecord record = generate_syndrome_once(sim, block, round);
            record.repetition = rep;
            syndromes.push_back(record.syndrome);
            records.push_back(std::move(record));
        }
        sim.apply(decoder_.correction(expand(round, majority(syndromes))), block_offset(block));
    }
    return records;
}

bool RecoveryEngine::has_logical_error(const PauliOperator &residual) const {
    PauliOperator p = residual * decoder_.correction(commutation_syndrome(code_, residual));
    if (commutation_syndrome(code_, p).any()) {
        return true;
    }
    for (const auto &x : logical_.xs) {
        if (!p.commutes_with(x)) {
            return true;
        }
    }
    for (const auto &z : logical_.zs) {
        if (!p.commutes_with(z)) {
            return true;
        }
    }
    return false;
}

TrialOutcome RecoveryEngine::run_logical_step_trial(const NoiseParams &noise, RngStream rng) const {
    FrameSimulator sim(width_, noise, std::move(rng));
    TrialOutcome out;
    sim.run(step_);
    for (size_t b = 0; b < num_blocks_; b++) {
        auto records = recover(sim, b);
        for (auto &r : records) {
            out.prep_exhausted = out.prep_exhausted || r.prep_exhausted;
        }
        out.records.insert(out.records.end(), records.begin(), records.end());
    }
    for (size_t b = 0; b < num_blocks_; b++) {
        out.residual.push_back(sim.frame(block_offset(b), code_.n));
        out.logical_failure = out.logical_failure || has_logical_error(out.residual.back());
    }
    out.logical_failure = out.logical_failure || out.prep_exhausted;
    return out;
}

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) {
        return {0, 1};
    }
    const double z = 1.959963984540054;
    double n = double(trials);
    double p = double(successes) / n;
    double denom = 1 + z * z / n;
    double center = (p + z * z / (2 * n)) / denom;
    double half = z / denom * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
    // The end points are exact at 0 and n successes; rounding would leave them a hair off.
    double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

FailureEstimate estimate_failure_rate(const RecoveryEngine &engine, const NoiseParams &noise, uint64_t trials, uint64_t seed, size_t threads) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    noise.validate();
    threads = std::max<size_t>(1, threads);
    std::vector<uint64_t> failures(threads, 0);
    std::vector<uint64_t> exhausted(threads, 0);
    parallel_for(trials, threads, [&](size_t worker, uint64_t i) {
        TrialOutcome outcome = engine.run_logical_step_trial(noise, RngStream(seed, i));
        failures[worker] += outcome.logical_failure;
        exhausted[worker] += outcome.prep_exhausted;
    });
    FailureEstimate est;
    est.trials = trials;
    for (size_t w = 0; w < threads; w++) {
        est.failures += failures[w];
        est.prep_exhausted += exhausted[w];
    }
    est.p_hat = double(est.failures) / double(trials);
    std::tie(est.ci_low, est.ci_high) = wilson_interval(est.failures, trials);
    return est;
}

CycleErrorEstimate estimate_cycle_error_rate(const RecoveryEngine &engine, const NoiseParams &noise, uint64_t cycles, uint64_t seed, size_t threads) {
    noise.validate();
    threads = std::max<size_t>(1, threads);
    const auto &rounds = engine.network().rounds;
    const size_t n = engine.code().n;
    std::vector<uint64_t> wrong(threads, 0);
    parallel_for(cycles, threads, [&](size_t worker, uint64_t i) {
        FrameSimulator sim(engine.width(), noise, RngStream(seed, i));
        size_t round = size_t(i % rounds.size());
        SyndromeRecord record = engine.generate_syndrome_once(sim, 0, round);
        Syndrome truth = commutation_syndrome(engine.code(), sim.frame(0, n));
        const auto &bits = rounds[round].syndrome_bits;
        for (size_t k = 0; k < bits.size(); k++) {
            if (record.syndrome[k] != truth[bits[k]]) {
                wrong[worker]++;
                break;
            }
        }
    });
    CycleErrorEstimate est;
    est.cycles = cycles;
    for (uint64_t w : wrong) {
        est.wrong += w;
    }
    est.rate = cycles ? double(est.wrong) / double(cycles) : 0;
    return est;
}

std::string failure_csv_header() {
    return "code,style,r,gamma,epsilon,trials,failures,p_hat,ci_low,ci_high,seed";
}

std::string failure_csv_row(const std::string &code, NetworkStyle style, size_t r, const NoiseParams &noise, const FailureEstimate &estimate, uint64_t seed) {
    std::string row = code;
    row += "," + std::string(style_name(style));
    row += "," + std::to_string(r);
    row += "," + format_double(noise.gamma);
    row += "," + format_double(noise.epsilon);
    row += "," + std::to_string(estimate.trials);
    row += "," + std::to_string(estimate.failures);
    row += "," + format_double(estimate.p_hat);
    row += "," + format_double(estimate.ci_low);
    row += "," + format_double(estimate.ci_high);
    row += "," + std::to_string(seed);
    return row;
}

size_t VerifyReport::num_passed() const {
    return size_t(std::count_if(checks.begin(), checks.end(), [](const RecoveryCheck &c) { return c.passed; }));
}

std::vector<PauliOperator> correctable_errors(const StabilizerCode &code) {
    std::vector<PauliOperator> out;
    for (size_t w = 0; w <= code.t; w++) {
        for_each_pauli_of_weight(code.n, w, [&](const PauliOperator &p) {
            out.push_back(p);
            return true;
        });
    }
    return out;
}

VerifyReport verify_recovery(
    const StabilizerCode &code,
    const RecoveryNetwork &network,
    const DecoderTable &table,
    const std::vector<PauliOperator> &errors,
    size_t states,
    size_t shots,
    RngStream &rng) {
    VerifyReport report;
    std::vector<Circuit> circuits;
    for (const auto &round : network.rounds) {
        circuits.push_back(round.without_verification());
        report.width = std::max(report.width, circuits.back().num_qubits());
    }
    if (report.width > kMaxStatevectorQubits) {
        throw std::invalid_argument(
            "verify_recovery: data plus ancilla need " + std::to_string(report.width) + " qubits, above the statevector limit of " +
            std::to_string(kMaxStatevectorQubits));
    }
    std::vector<StateVector> inputs;
    for (size_t s = 0; s < states; s++) {
        inputs.push_back(random_encoded_state(code, rng));
    }
    for (const auto &e : errors) {
        RecoveryCheck check;
        check.error = e;
        Syndrome expected = commutation_syndrome(code, e);
        for (const auto &phi : inputs) {
            for (size_t shot = 0; shot < shots; shot++) {
                StateVector psi = phi;
                psi.apply_pauli(e);
                double fidelity = 1;
                for (size_t r = 0; r < network.rounds.size(); r++) {
                    const ExtractionRound &round = network.rounds[r];
                    auto run = run_statevector(circuits[r], psi, PauliOperator(), rng);
                    BitVector bits = round.evaluate(run.results);
                    Syndrome s(code.num_generators());
                    for (size_t k = 0; k < bits.size(); k++) {
                        s.set(round.syndrome_bits[k], bits[k]);
                        check.syndrome_matches = check.syndrome_matches && bits[k] == expected[round.syndrome_bits[k]];
                    }
                    run.state.apply_pauli(table.correction(s));
                    if (r + 1 == network.rounds.size()) {
                        fidelity = std::min(fidelity, data_fidelity(phi, run.state));
                    } else {
                        // The measured ancilla is left in a product state; carry only the data.
                        psi = data_branch(run.state, code.n);
                        fidelity = std::min(fidelity, data_fidelity(psi, run.state));
                    }
                }
                check.min_fidelity = std::min(check.min_fidelity, fidelity);
                check.runs++;
            }
        }
        check.passed = check.syndrome_matches && std::abs(check.min_fidelity - 1) < 1e-10;
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace qecstab
