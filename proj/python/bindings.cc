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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qecstab/analysis.h"
#include "qecstab/cli.h"
#include "qecstab/codes.h"
#include "qecstab/decoder.h"
#include "qecstab/networks.h"
#include "qecstab/protocol.h"

namespace py = pybind11;
using namespace qecstab;

namespace {

std::string bits_to_string(const BitVector &b) {
    std::string s(b.size(), '0');
    for (size_t k = 0; k < b.size(); k++) {
        s[k] = b[k] ? '1' : '0';
    }
    return s;
}

BitVector bits_from_string(const std::string &s) {
    BitVector b(s.size());
    for (size_t k = 0; k < s.size(); k++) {
        if (s[k] != '0' && s[k] != '1') {
            throw std::invalid_argument("syndrome must be a string of 0 and 1");
        }
        b.set(k, s[k] == '1');
    }
    return b;
}

CurveConfig make_curve_config(const std::string &name, double gamma_min, double gamma_max, size_t points, size_t c, size_t r_max,
                              std::optional<double> epsilon) {
    auto code = code_by_name(name);
    CurveConfig cfg;
    cfg.code = name;
    cfg.n = code.n;
    cfg.t = code.t;
    cfg.gamma_min = gamma_min;
    cfg.gamma_max = gamma_max;
    cfg.points = points;
    cfg.c = c;
    cfg.r_max = r_max;
    cfg.epsilon = epsilon;
    cfg.validate();
    return cfg;
}

py::dict point_dict(const AnalysisPoint &p) {
    py::dict d;
    d["gamma"] = p.gamma;
    d["epsilon"] = p.epsilon;
    d["r"] = p.r;
    d["r_saturated"] = p.r_saturated;
    d["alpha"] = p.alpha;
    d["p1"] = p.p1;
    d["p2"] = p.p2;
    d["p"] = p.p;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stabilizer-code recovery simulator";
    m.attr("__version__") = QECSTAB_VERSION;

    py::class_<StabilizerCode>(m, "StabilizerCode")
        .def_readonly("name", &StabilizerCode::name)
        .def_readonly("n", &StabilizerCode::n)
        .def_readonly("k", &StabilizerCode::k)
        .def_readonly("d", &StabilizerCode::d)
        .def_readonly("t", &StabilizerCode::t)
        .def_property_readonly("is_css", &StabilizerCode::is_css)
        .def_property_readonly("parameters", &StabilizerCode::parameters)
        .def("generators",
             [](const StabilizerCode &c) {
                 std::vector<std::string> out;
                 for (size_t i = 0; i < c.num_generators(); i++) {
                     out.push_back(c.generator(i).to_string());
                 }
                 return out;
             })
        .def("syndrome", [](const StabilizerCode &c, const std::string &e) { return bits_to_string(commutation_syndrome(c, PauliOperator::from_string(e))); })
        .def("to_text", &emit_code_file)
        .def("__repr__", [](const StabilizerCode &c) { return "<StabilizerCode " + c.parameters() + " " + c.name + ">"; });

    m.def("code_by_name", [](const std::string &name) { return code_by_name(name); });
    m.def("registry_names", &registry_names);
    m.def("parse_code", [](const std::string &text) { return parse_code_file(text); });
    m.def("css_from_classical", [](const std::string &name) { return css_from_classical(classical_code_by_name(name)); });

    py::class_<DecoderTable>(m, "DecoderTable")
        .def(py::init(&DecoderTable::build), py::arg("code"))
        .def("__len__", &DecoderTable::size)
        .def("lookup",
             [](const DecoderTable &t, const std::string &s) -> std::optional<std::string> {
                 auto fix = t.lookup(bits_from_string(s));
                 if (!fix) {
                     return std::nullopt;
                 }
                 return fix->to_string();
             });

    m.def(
        "synth",
        [](const std::string &code, const std::string &style, const std::string &verification) {
            auto net = synth_recovery_network(code_by_name(code), parse_style(style), parse_verification(verification));
            py::list rounds;
            for (const auto &r : net.rounds) {
                py::dict d;
                d["name"] = r.name;
                d["width"] = r.width();
                d["couplings"] = r.couplings();
                d["verification_checks"] = r.verify_expected.size();
                d["circuit"] = r.full().to_text();
                rounds.append(d);
            }
            return rounds;
        },
        py::arg("code"), py::arg("style") = "ancilla", py::arg("verification") = "full");

    m.def(
        "verify",
        [](const std::string &code_name, const std::string &style, size_t states, size_t shots, uint64_t seed) {
            auto code = code_by_name(code_name);
            auto net = synth_recovery_network(code, parse_style(style));
            RngStream rng(seed, 0);
            auto report = verify_recovery(code, net, DecoderTable::build(code), correctable_errors(code), states, shots, rng);
            py::list checks;
            for (const auto &c : report.checks) {
                py::dict d;
                d["error"] = c.error.to_string();
                d["min_fidelity"] = c.min_fidelity;
                d["syndrome_matches"] = c.syndrome_matches;
                d["passed"] = c.passed;
                checks.append(d);
            }
            return checks;
        },
        py::arg("code"), py::arg("style") = "ancilla", py::arg("states") = 3, py::arg("shots") = 1, py::arg("seed") = 1);

    m.def(
        "estimate_failure_rate",
        [](const std::string &code, const std::string &style, double gamma, double epsilon, size_t r, uint64_t trials, uint64_t seed,
           size_t threads, const std::string &verification, bool two_blocks) {
            RecoveryConfig cfg;
            cfg.style = parse_style(style);
            cfg.verification = parse_verification(verification);
            cfg.r = r;
            cfg.validate();
            NoiseParams noise{gamma, epsilon};
            noise.validate();
            RecoveryEngine engine(code_by_name(code), cfg, two_blocks ? 2 : 1);
            FailureEstimate est;
            {
                py::gil_scoped_release release;
                est = estimate_failure_rate(engine, noise, trials, seed, threads);
            }
            py::dict d;
            d["trials"] = est.trials;
            d["failures"] = est.failures;
            d["prep_exhausted"] = est.prep_exhausted;
            d["p_hat"] = est.p_hat;
            d["ci_low"] = est.ci_low;
            d["ci_high"] = est.ci_high;
            return d;
        },
        py::arg("code"), py::arg("style") = "ancilla", py::arg("gamma") = 0.0, py::arg("epsilon") = 0.0, py::arg("r") = 3,
        py::arg("trials") = 10000, py::arg("seed") = 1, py::arg("threads") = 1, py::arg("verification") = "full", py::arg("two_blocks") = false);

    m.def("alpha", &alpha_exact, py::arg("n"), py::arg("gamma"), py::arg("epsilon"));
    m.def("p1", &p1_literal, py::arg("r"), py::arg("alpha"));
    m.def("p2", &p2, py::arg("n"), py::arg("t"), py::arg("r"), py::arg("c"), py::arg("q"));
    m.def(
        "analyze_point",
        [](const std::string &code, double gamma, std::optional<double> epsilon, size_t c, size_t r_max) {
            return point_dict(analyze_point(make_curve_config(code, 1e-7, 1e-2, 51, c, r_max, epsilon), gamma));
        },
        py::arg("code"), py::arg("gamma"), py::arg("epsilon") = py::none(), py::arg("c") = 1, py::arg("r_max") = 15);
    m.def(
        "curve",
        [](const std::string &code, double gamma_min, double gamma_max, size_t points, std::optional<double> epsilon, size_t c, size_t r_max) {
            py::list out;
            for (const auto &p : curve(make_curve_config(code, gamma_min, gamma_max, points, c, r_max, epsilon))) {
                out.append(point_dict(p));
            }
            return out;
        },
        py::arg("code"), py::arg("gamma_min") = 1e-7, py::arg("gamma_max") = 1e-2, py::arg("points") = 51, py::arg("epsilon") = py::none(),
        py::arg("c") = 1, py::arg("r_max") = 15);
    m.def(
        "break_even",
        [](const std::string &code, std::optional<double> epsilon, size_t c, size_t r_max) {
            return break_even(make_curve_config(code, 1e-7, 1e-2, 51, c, r_max, epsilon));
        },
        py::arg("code"), py::arg("epsilon") = py::none(), py::arg("c") = 1, py::arg("r_max") = 15);

    // Same entry point as the executable; returns (exit code, stdout, stderr).
    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "qecstab");
        std::vector<const char *> argv;
        for (const auto &a : args) {
            argv.push_back(a.c_str());
        }
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(int(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    });

    py::register_exception<std::invalid_argument>(m, "QecstabError", PyExc_ValueError);
}
