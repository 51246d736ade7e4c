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

#ifndef QECSTAB_PROTOCOL_H
#define QECSTAB_PROTOCOL_H

#include <cstdint>
#include <string>
#include <vector>

#include "qecstab/codes.h"
#include "qecstab/decoder.h"
#include "qecstab/networks.h"
#include "qecstab/noise.h"
#include "qecstab/pauli_frame.h"
#include "qecstab/rng.h"

namespace qecstab {

struct RecoveryConfig {
    NetworkStyle style = NetworkStyle::ancilla;
    VerificationLevel verification = VerificationLevel::full;
    /// Syndrome repetitions per round; odd.
    size_t r = 3;
    size_t max_prep_retries = 100;

    /// Throws std::invalid_argument for even or zero r, or zero retries.
    void validate() const;
};

struct SyndromeRecord {
    /// Which extraction round (0 = X-round for css, else the only round).
    size_t round = 0;
    /// Repetition index within the round, < r.
    size_t repetition = 0;
    /// The round's syndrome bits, in ExtractionRound::syndrome_bits order.
    BitVector syndrome;
    size_t prep_retries = 0;
    bool prep_exhausted = false;
};

struct TrialOutcome {
    bool logical_failure = false;
    bool prep_exhausted = false;
    /// Data frame of each block before the final noiseless decode.
    std::vector<PauliOperator> residual;
    std::vector<SyndromeRecord> records;
};

/// Result of one verified preparation attempt sequence.
struct PrepOutcome {
    size_t retries = 0;
    bool accepted = false;
};

/// Fault-tolerant recovery on one or two code blocks driven through a Pauli-frame simulator.
///
/// Qubit layout: block 0 data, block 1 data (if any), then the shared ancilla and verifier
/// registers of the extraction rounds.
class RecoveryEngine {
   public:
    RecoveryEngine(StabilizerCode code, RecoveryConfig config, size_t num_blocks = 1);

    const StabilizerCode &code() const {
        return code_;
    }
    const RecoveryConfig &config() const {
        return config_;
    }
    const RecoveryNetwork &network() const {
        return network_;
    }
    const DecoderTable &decoder() const {
        return decoder_;
    }
    void set_decoder(DecoderTable table) {
        decoder_ = std::move(table);
    }
    size_t num_blocks() const {
        return num_blocks_;
    }
    size_t width() const {
        return width_;
    }
    size_t block_offset(size_t block) const {
        return block * code_.n;
    }

    /// Runs preparation and verification of the given round's ancilla until accepted or the
    /// retry budget is spent.
    PrepOutcome prepare_verified_ancilla(FrameSimulator &sim, size_t round) const;
    /// Preparation, interaction and measurement, then the parity checks of the measured word.
    SyndromeRecord generate_syndrome_once(FrameSimulator &sim, size_t block, size_t round) const;
    /// r cycles of every round, each round followed by the majority-decoded correction.
    std::vector<SyndromeRecord> recover(FrameSimulator &sim, size_t block) const;
    /// Full syndrome (all generators) with only the bits of `round` filled from `bits`.
    Syndrome expand(size_t round, const BitVector &bits) const;
    /// Bitwise majority of the records' syndromes.
    static BitVector majority(const std::vector<BitVector> &syndromes);

    /// True iff the block's frame, after one ideal decode, is a nontrivial logical operator.
    bool has_logical_error(const PauliOperator &residual) const;

    /// Two blocks with a transversal cnot for css-style engines built with two blocks; a single
    /// block with an identity step otherwise. Failure is judged by an ideal final decode.
    TrialOutcome run_logical_step_trial(const NoiseParams &noise, RngStream rng) const;

    /// Transversal cnot between the two blocks, on the engine's width.
    const Circuit &step_circuit() const {
        return step_;
    }

   private:
    StabilizerCode code_;
    RecoveryConfig config_;
    size_t num_blocks_;
    RecoveryNetwork network_;
    DecoderTable decoder_;
    LogicalOperators logical_;
    size_t width_ = 0;
    std::vector<Circuit> prep_;
    std::vector<Circuit> verify_;
    std::vector<std::vector<bool>> expected_;
    // interact_[block][round]
    std::vector<std::vector<Circuit>> interact_;
    Circuit step_;
};

struct FailureEstimate {
    uint64_t trials = 0;
    uint64_t failures = 0;
    uint64_t prep_exhausted = 0;
    double p_hat = 0;
    double ci_low = 0;
    double ci_high = 0;
};

/// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials);

/// Monte Carlo estimate of the logical step failure rate. Trial i uses RngStream(seed, i), so the
/// result does not depend on `threads`.
FailureEstimate estimate_failure_rate(const RecoveryEngine &engine, const NoiseParams &noise, uint64_t trials, uint64_t seed, size_t threads = 1);

struct CycleErrorEstimate {
    uint64_t cycles = 0;
    uint64_t wrong = 0;
    double rate = 0;
};

/// Repeated single syndrome-extraction cycles on one block starting from an error-free data frame;
/// a cycle is wrong when its syndrome differs from that of the data frame at the end of the cycle.
CycleErrorEstimate estimate_cycle_error_rate(const RecoveryEngine &engine, const NoiseParams &noise, uint64_t cycles, uint64_t seed, size_t threads = 1);

/// CSV header and row for Monte Carlo results.
std::string failure_csv_header();
std::string failure_csv_row(const std::string &code, NetworkStyle style, size_t r, const NoiseParams &noise, const FailureEstimate &estimate, uint64_t seed);

// Exact statevector check of the recovery contract.

struct RecoveryCheck {
    PauliOperator error;
    size_t runs = 0;
    double min_fidelity = 1;
    bool syndrome_matches = true;
    bool passed = false;
};

struct VerifyReport {
    size_t width = 0;
    std::vector<RecoveryCheck> checks;

    size_t num_passed() const;
    bool all_passed() const {
        return num_passed() == checks.size();
    }
};

/// Every Pauli of weight <= t, identity first.
std::vector<PauliOperator> correctable_errors(const StabilizerCode &code);

/// For every error and `states` random code states, `shots` times: apply the error, run each
/// round (preparation and interaction; verification is omitted to stay within the statevector
/// width), decode, correct, and compare with the original state. Syndromes must equal the
/// commutation syndrome on every shot and the fidelity must be 1 within 1e-10.
/// Throws std::invalid_argument if data plus ancilla exceed the statevector limit.
VerifyReport verify_recovery(
    const StabilizerCode &code,
    const RecoveryNetwork &network,
    const DecoderTable &table,
    const std::vector<PauliOperator> &errors,
    size_t states,
    size_t shots,
    RngStream &rng);

}  // namespace qecstab

#endif
