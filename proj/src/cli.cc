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

#include "qecstab/cli.h"

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qecstab/analysis.h"
#include "qecstab/codes.h"
#include "qecstab/decoder.h"
#include "qecstab/networks.h"
#include "qecstab/protocol.h"

namespace qecstab {

namespace {

constexpr int kDomainFailure = 1;

// Thrown for conditions that are the caller's fault but only detectable after parsing.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

uint64_t default_seed() {
    if (const char *env = std::getenv("QECSTAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw UsageError(std::string("QECSTAB_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

std::string timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char *env = std::getenv("SOURCE_DATE_EPOCH")) {
        t = std::time_t(std::stoll(env));
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::invalid_argument("cannot write " + path);
    }
    f << text;
}

/// Registry name, or a path to a code file.
StabilizerCode resolve_code(const std::string &spec) {
    for (const auto &name : registry_names()) {
        if (name == spec) {
            return code_by_name(spec);
        }
    }
    if (std::filesystem::exists(spec)) {
        return parse_code_file(read_file(spec));
    }
    std::string known;
    for (const auto &name : registry_names()) {
        known += (known.empty() ? "" : ", ") + name;
    }
    throw std::invalid_argument("unknown code '" + spec + "' (registry: " + known + ", or a code file path)");
}

std::string pauli_rows(const StabilizerCode &code) {
    std::string s;
    for (size_t i = 0; i < code.num_generators(); i++) {
        s += "  g" + std::to_string(i) + " " + code.generator(i).pauli.to_string() + "\n";
    }
    return s;
}

// Options given on the command line (or their defaults), for the run manifest.
nlohmann::ordered_json collect_parameters(const CLI::App *app) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const CLI::Option *opt : app->get_options()) {
        std::string name = opt->get_name(false, true);
        if (name == "--help" || name == "-h" || name == "--threads") {
            continue;
        }
        if (opt->count() > 0) {
            if (opt->get_expected_max() == 0) {
                params[name] = true;
            } else if (opt->results().size() == 1) {
                params[name] = opt->results()[0];
            } else {
                params[name] = opt->results();
            }
        } else if (!opt->get_default_str().empty()) {
            params[name] = opt->get_default_str();
        }
    }
    return params;
}

void write_manifest(const std::string &output, const std::string &command, const CLI::App *app, std::optional<uint64_t> seed) {
    nlohmann::ordered_json m;
    m["command"] = command;
    m["parameters"] = collect_parameters(app);
    if (seed) {
        m["seed"] = *seed;
    } else {
        m["seed"] = nullptr;
    }
    m["version"] = QECSTAB_VERSION;
    m["timestamp"] = timestamp();
    write_file(output + ".manifest.json", m.dump(2) + "\n");
}

std::string summarize_round(const ExtractionRound &round) {
    std::ostringstream s;
    Circuit full = round.full();
    s << "# round " << round.name << ": width " << round.width() << ", gates " << full.size() << ", data-ancilla couplings " << round.couplings()
      << ", verification checks " << round.verify_expected.size() << "\n";
    return s.str();
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qecstab: stabilizer-code recovery with prepared-ancilla syndrome extraction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(QECSTAB_VERSION));

    // code
    auto *code_cmd = app.add_subcommand("code", "Inspect, validate, build and emit stabilizer codes");
    code_cmd->require_subcommand(1);
    std::string code_arg;
    auto *code_info = code_cmd->add_subcommand("info", "Print n, k, d, t and the generators");
    code_info->add_option("code", code_arg, "Registry name or code file")->required();
    auto *code_validate = code_cmd->add_subcommand("validate", "Check that a code file describes a valid stabilizer code");
    code_validate->add_option("file", code_arg, "Code file")->required();
    std::string classical;
    std::string code_out;
    auto *code_css = code_cmd->add_subcommand("build-css", "Build a CSS code from a classical dual-containing code");
    code_css->add_option("--classical", classical, "hamming7 or golay23")->required();
    code_css->add_option("--out", code_out, "Write the code file here");
    auto *code_emit = code_cmd->add_subcommand("emit", "Print a code in code-file format");
    code_emit->add_option("code", code_arg, "Registry name or code file")->required();
    code_emit->add_option("--out", code_out, "Write the code file here");

    // synth
    std::string style_arg = "ancilla";
    std::string verification_arg = "full";
    std::string out_path;
    auto *synth = app.add_subcommand("synth", "Synthesize the syndrome-extraction circuits for a code");
    synth->add_option("--code", code_arg, "Registry name or code file")->required();
    synth->add_option("--style", style_arg, "direct, ancilla or css")->capture_default_str();
    synth->add_option("--verification", verification_arg, "none, parity_checks or full")->capture_default_str();
    synth->add_option("--out", out_path, "Write the circuit text dump here");

    // verify
    bool exhaustive = false;
    bool corrupt = false;
    size_t states = 3;
    size_t shots = 1;
    uint64_t seed = 0;
    auto *verify = app.add_subcommand("verify", "Check the recovery contract on the statevector engine");
    verify->add_option("--code", code_arg, "Registry name or code file")->required();
    verify->add_option("--style", style_arg, "direct, ancilla or css")->capture_default_str();
    verify->add_flag("--exhaustive", exhaustive, "Every error of weight <= t (default: identity and single-qubit errors)");
    verify->add_option("--states", states, "Random encoded states per error")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--shots", shots, "Measurement shots per state")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Random seed (default from QECSTAB_SEED, else 1)");
    verify->add_flag("--corrupt-decoder", corrupt, "Negative control: break the decoder entry for X on qubit 0");

    // mc
    std::vector<double> gammas;
    std::optional<double> epsilon;
    std::string epsilon_rule = "gamma/10n";
    size_t r = 3;
    uint64_t trials = 10000;
    size_t threads = 1;
    size_t max_retries = 100;
    bool single_block = false;
    auto *mc = app.add_subcommand("mc", "Monte Carlo failure rate of a stabilized logical step");
    mc->add_option("--code", code_arg, "Registry name or code file")->required();
    mc->add_option("--style", style_arg, "direct, ancilla or css")->capture_default_str();
    mc->add_option("--verification", verification_arg, "none, parity_checks or full")->capture_default_str();
    mc->add_option("--gamma", gammas, "Gate and measurement failure probabilities (comma-separated)")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    auto *eps_opt = mc->add_option("--epsilon", epsilon, "Idle failure probability per time-step")->check(CLI::Range(0.0, 1.0));
    mc->add_option("--epsilon-rule", epsilon_rule, "Used without --epsilon: gamma/10n or zero")
        ->capture_default_str()
        ->check(CLI::IsMember({"gamma/10n", "zero"}))
        ->excludes(eps_opt);
    mc->add_option("--r", r, "Syndrome repetitions (odd)")->capture_default_str();
    mc->add_option("--trials", trials, "Trials per gamma")->capture_default_str()->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed, "Random seed (default from QECSTAB_SEED, else 1)");
    mc->add_option("--threads", threads, "Worker threads; results do not depend on this")->capture_default_str()->check(CLI::PositiveNumber);
    mc->add_option("--max-prep-retries", max_retries, "Ancilla preparation retry budget")->capture_default_str()->check(CLI::PositiveNumber);
    mc->add_flag("--single-block", single_block, "Recover one block with an identity step even for the css style");
    mc->add_option("--out", out_path, "Write the CSV here instead of standard output");

    // analyze
    CurveConfig curve_config;
    std::optional<double> analyze_epsilon;
    auto *analyze = app.add_subcommand("analyze", "Closed-form failure model");
    analyze->require_subcommand(1);
    auto add_curve_options = [&](CLI::App *cmd) {
        cmd->add_option("--code", code_arg, "Registry name or code file")->required();
        cmd->add_option("--gamma-min", curve_config.gamma_min, "Smallest gamma")->capture_default_str()->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--gamma-max", curve_config.gamma_max, "Largest gamma")->capture_default_str()->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--points", curve_config.points, "Log-spaced grid points")->capture_default_str()->check(CLI::Range(2, 100000));
        cmd->add_option("--c", curve_config.c, "Constant c in N = n(4r + c)")->capture_default_str();
        cmd->add_option("--r-max", curve_config.r_max, "Largest r considered")->capture_default_str()->check(CLI::Range(3, 1001));
        cmd->add_option("--epsilon", analyze_epsilon, "Fixed epsilon (default gamma/10n)")->check(CLI::Range(0.0, 1.0));
        cmd->add_option("--out", out_path, "Write the output here instead of standard output");
    };
    auto *curve_cmd = analyze->add_subcommand("curve", "p = 4(P1 + P2) over a gamma grid, as CSV");
    add_curve_options(curve_cmd);
    auto *break_cmd = analyze->add_subcommand("break-even", "Solve p(gamma) = gamma");
    add_curve_options(break_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        // --help and --version come through here with code 0.
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        auto emit = [&](const std::string &text, const std::string &command, const CLI::App *cmd, std::optional<uint64_t> run_seed) {
            if (out_path.empty()) {
                out << text;
            } else {
                write_file(out_path, text);
                write_manifest(out_path, command, cmd, run_seed);
            }
        };

        if (code_info->parsed()) {
            auto code = resolve_code(code_arg);
            out << code.parameters() << " " << code.name << "\n";
            out << "n = " << code.n << ", k = " << code.k << ", d = " << code.d << ", t = " << code.t << "\n";
            out << "css: " << (code.is_css() ? "yes" : "no") << "\n";
            out << "generators (" << code.num_generators() << "):\n" << pauli_rows(code);
            out << "hx | hz:\n";
            std::istringstream rows(emit_code_file(code));
            std::string line;
            while (std::getline(rows, line)) {
                if (!line.empty() && line[0] != '#') {
                    out << "  " << line << "\n";
                }
            }
            return 0;
        }
        if (code_validate->parsed()) {
            try {
                auto code = parse_code_file(read_file(code_arg));
                out << "valid " << code.parameters() << " " << code.name << "\n";
                return 0;
            } catch (const std::invalid_argument &e) {
                err << "invalid: " << e.what() << "\n";
                return kDomainFailure;
            }
        }
        if (code_css->parsed() || code_emit->parsed()) {
            StabilizerCode code = code_css->parsed() ? css_from_classical(classical_code_by_name(classical)) : resolve_code(code_arg);
            std::string text = emit_code_file(code);
            if (code_out.empty()) {
                if (code_css->parsed()) {
                    out << code.parameters() << " " << code.name << "\n";
                }
                out << text;
            } else {
                write_file(code_out, text);
                write_manifest(code_out, code_css->parsed() ? "code build-css" : "code emit", code_css->parsed() ? code_css : code_emit, std::nullopt);
                out << code.parameters() << " " << code.name << " -> " << code_out << "\n";
            }
            return 0;
        }

        if (synth->parsed()) {
            auto code = resolve_code(code_arg);
            auto network = synth_recovery_network(code, parse_style(style_arg), parse_verification(verification_arg));
            std::string summary;
            std::string dump;
            for (const auto &round : network.rounds) {
                summary += summarize_round(round);
                dump += "# round " + round.name + "\n" + round.full().to_text();
            }
            if (out_path.empty()) {
                out << summary << dump;
            } else {
                write_file(out_path, summary + dump);
                write_manifest(out_path, "synth", synth, std::nullopt);
                out << summary;
            }
            return 0;
        }

        if (verify->parsed()) {
            if (verify->count("--seed") == 0) {
                seed = default_seed();
            }
            auto code = resolve_code(code_arg);
            auto network = synth_recovery_network(code, parse_style(style_arg));
            auto table = DecoderTable::build(code);
            std::vector<PauliOperator> errors;
            if (exhaustive) {
                errors = correctable_errors(code);
            } else {
                errors.push_back(PauliOperator(code.n));
                for_each_pauli_of_weight(code.n, 1, [&](const PauliOperator &p) {
                    errors.push_back(p);
                    return true;
                });
            }
            if (corrupt) {
                auto e = PauliOperator::single(code.n, 0, 'X');
                table.set_entry(commutation_syndrome(code, e), PauliOperator::single(code.n, 0, 'Z'));
            }
            RngStream rng(seed, 0);
            VerifyReport report;
            try {
                report = verify_recovery(code, network, table, errors, states, shots, rng);
            } catch (const std::invalid_argument &e) {
                err << "error: " << e.what() << "\n";
                return kDomainFailure;
            }
            out << "# " << code.parameters() << " " << code.name << ", style " << style_name(network.style) << ", statevector width " << report.width
                << ", " << states << " states x " << shots << " shots per error\n";
            char fidelity[32];
            for (const auto &c : report.checks) {
                std::snprintf(fidelity, sizeof(fidelity), "%.12f", c.min_fidelity);
                out << (c.passed ? "PASS " : "FAIL ") << c.error.to_string() << " syndrome " << commutation_syndrome(code, c.error).to_string()
                    << (c.syndrome_matches ? "" : " (mismatch)") << " min_fidelity " << fidelity << "\n";
            }
            out << report.num_passed() << "/" << report.checks.size() << " passed\n";
            return report.all_passed() ? 0 : kDomainFailure;
        }

        if (mc->parsed()) {
            if (mc->count("--seed") == 0) {
                seed = default_seed();
            }
            auto code = resolve_code(code_arg);
            RecoveryConfig config;
            config.style = parse_style(style_arg);
            config.verification = parse_verification(verification_arg);
            config.r = r;
            config.max_prep_retries = max_retries;
            try {
                config.validate();
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            size_t blocks = (config.style == NetworkStyle::css && !single_block) ? 2 : 1;
            RecoveryEngine engine(code, config, blocks);
            std::string csv = failure_csv_header() + "\n";
            for (double g : gammas) {
                NoiseParams noise{g, epsilon ? *epsilon : (epsilon_rule == "zero" ? 0.0 : g / (10.0 * double(code.n)))};
                auto estimate = estimate_failure_rate(engine, noise, trials, seed, threads);
                csv += failure_csv_row(code.name, config.style, r, noise, estimate, seed) + "\n";
            }
            emit(csv, "mc", mc, seed);
            return 0;
        }

        if (curve_cmd->parsed() || break_cmd->parsed()) {
            auto code = resolve_code(code_arg);
            curve_config.code = code.name;
            curve_config.n = code.n;
            curve_config.t = code.t;
            curve_config.epsilon = analyze_epsilon;
            try {
                curve_config.validate();
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            if (curve_cmd->parsed()) {
                std::string csv = curve_csv_header() + "\n";
                for (const auto &pt : curve(curve_config)) {
                    csv += curve_csv_row(code.name, pt) + "\n";
                }
                emit(csv, "analyze curve", curve_cmd, std::nullopt);
                return 0;
            }
            auto star = break_even(curve_config);
            if (!star) {
                err << "no break-even point: p(gamma) - gamma does not change sign on [" << format_sig6(curve_config.gamma_min) << ", "
                    << format_sig6(curve_config.gamma_max) << "]\n";
                return kDomainFailure;
            }
            auto pt = analyze_point(curve_config, *star);
            std::string report = "code " + code.name + "\n";
            report += "break_even_gamma " + format_sig6(*star) + "\n";
            report += "r " + std::to_string(pt.r) + "\n";
            report += "p " + format_sig6(pt.p) + "\n";
            emit(report, "analyze break-even", break_cmd, std::nullopt);
            return 0;
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kDomainFailure;
    }
    return 0;
}

}  // namespace qecstab
