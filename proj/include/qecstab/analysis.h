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

#ifndef QECSTAB_ANALYSIS_H
#define QECSTAB_ANALYSIS_H

#include <optional>
#include <string>
#include <vector>

namespace qecstab {

/// Probability that one syndrome cycle is wrong: 1 - [(1 - gamma)(1 - epsilon)^n]^(3n).
double alpha_exact(size_t n, double gamma, double epsilon);
/// Small-parameter form 3n(gamma + n epsilon).
double alpha_approx(size_t n, double gamma, double epsilon);

/// Sum_{i=(r+1)/2}^{r} C(r,i) alpha^i, without (1 - alpha) factors. Throws for even r.
double p1_literal(size_t r, double alpha);
/// Exact binomial tail: probability that more than half of r independent cycles are wrong.
double p1_binomial(size_t r, double alpha);

/// Sum_{i=t+1}^{N} C(N,i) q^i with N = n(4r + c). Terms below 1e-30 of the largest are dropped
/// and the rest summed smallest first.
double p2(size_t n, size_t t, size_t r, size_t c, double q);

struct RChoice {
    size_t r = 3;
    /// No odd r <= r_max gave P1 < P2; r is r_max.
    bool saturated = false;
};
/// Smallest odd r in [3, r_max] with p1_literal(r, alpha) < p2(n, t, r, c, gamma + n epsilon), or 3
/// when alpha = 0.
RChoice choose_r(size_t n, size_t t, size_t c, double gamma, double epsilon, size_t r_max = 15);

struct AnalysisPoint {
    double gamma = 0;
    double epsilon = 0;
    size_t r = 3;
    bool r_saturated = false;
    double alpha = 0;
    double p1 = 0;
    double p2 = 0;
    /// 4(p1 + p2), clipped to 1.
    double p = 0;
};

struct CurveConfig {
    std::string code;
    size_t n = 0;
    size_t t = 0;
    double gamma_min = 1e-7;
    double gamma_max = 1e-2;
    size_t points = 51;
    size_t c = 1;
    size_t r_max = 15;
    /// Fixed epsilon; when absent epsilon = gamma / (10 n).
    std::optional<double> epsilon;

    double epsilon_for(double gamma) const;
    /// Throws std::invalid_argument on a bad grid, r_max < 3 or n = 0.
    void validate() const;
};

/// `points` log-spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, size_t points);

AnalysisPoint analyze_point(const CurveConfig &config, double gamma);
std::vector<AnalysisPoint> curve(const CurveConfig &config);

/// gamma* with p(gamma*) = gamma*, by bisection in log gamma inside the first grid interval where
/// p - gamma changes sign from negative to positive. Relative precision 1e-6.
std::optional<double> break_even(const CurveConfig &config);

/// floor(1 / p); nullopt when p = 0. Throws for p outside [0, 1].
std::optional<double> steps_supported(double p);

/// "%.6g".
std::string format_sig6(double v);
std::string curve_csv_header();
std::string curve_csv_row(const std::string &code, const AnalysisPoint &point);

}  // namespace qecstab

#endif
