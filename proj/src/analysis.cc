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

#include "qecstab/analysis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qecstab {

namespace {

void check_probability(double p, const char *what) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

void check_odd(size_t r) {
    if (r == 0 || r % 2 == 0) {
        throw std::invalid_argument("r must be odd and at least 1, got " + std::to_string(r));
    }
}

double log_choose(double n, double k) {
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double sum_smallest_first(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double total = 0;
    for (double t : terms) {
        total += t;
    }
    return total;
}

}  // namespace

double alpha_exact(size_t n, double gamma, double epsilon) {
    check_probability(gamma, "gamma");
    check_probability(epsilon, "epsilon");
    // log1p keeps precision when gamma and epsilon are tiny.
    double log_keep = 3.0 * double(n) * (std::log1p(-gamma) + double(n) * std::log1p(-epsilon));
    return -std::expm1(log_keep);
}

double alpha_approx(size_t n, double gamma, double epsilon) {
    return 3.0 * double(n) * (gamma + double(n) * epsilon);
}

double p1_literal(size_t r, double alpha) {
    check_odd(r);
    check_probability(alpha, "alpha");
    if (alpha == 0) {
        return 0;
    }
    std::vector<double> terms;
    for (size_t i = (r + 1) / 2; i <= r; i++) {
        terms.push_back(std::exp(log_choose(double(r), double(i)) + double(i) * std::log(alpha)));
    }
    return sum_smallest_first(terms);
}

double p1_binomial(size_t r, double alpha) {
    check_odd(r);
    check_probability(alpha, "alpha");
    if (alpha == 0) {
        return 0;
    }
    if (alpha == 1) {
        return 1;
    }
    std::vector<double> terms;
    for (size_t i = (r + 1) / 2; i <= r; i++) {
        terms.push_back(std::exp(log_choose(double(r), double(i)) + double(i) * std::log(alpha) + double(r - i) * std::log1p(-alpha)));
    }
    return sum_smallest_first(terms);
}

double p2(size_t n, size_t t, size_t r, size_t c, double q) {
    check_probability(q, "q");
    const size_t big_n = n * (4 * r + c);
    if (q == 0 || t + 1 > big_n) {
        return 0;
    }
    const double log_q = std::log(q);
    const double cutoff = std::log(1e30);
    std::vector<double> log_terms;
    double largest = -INFINITY;
    double previous = -INFINITY;
    for (size_t i = t + 1; i <= big_n; i++) {
        double lt = log_choose(double(big_n), double(i)) + double(i) * log_q;
        // Terms are unimodal in i: stop once past the peak and negligible.
        if (lt < previous && lt < largest - cutoff) {
            break;
        }
        log_terms.push_back(lt);
        largest = std::max(largest, lt);
        previous = lt;
    }
    std::vector<double> terms;
    for (double lt : log_terms) {
        if (lt >= largest - cutoff) {
            terms.push_back(std::exp(lt));
        }
    }
    return sum_smallest_first(terms);
}

RChoice choose_r(size_t n, size_t t, size_t c, double gamma, double epsilon, size_t r_max) {
    if (r_max < 3) {
        throw std::invalid_argument("r_max must be at least 3");
    }
    if (r_max % 2 == 0) {
        r_max--;
    }
    double alpha = alpha_exact(n, gamma, epsilon);
    double q = std::min(1.0, gamma + double(n) * epsilon);
    for (size_t r = 3; r <= r_max; r += 2) {
        // With alpha = 0 no repetition count can improve on P1 = 0.
        double p1 = p1_literal(r, alpha);
        if (p1 < p2(n, t, r, c, q) || p1 == 0) {
            return {r, false};
        }
    }
    return {r_max, true};
}

double CurveConfig::epsilon_for(double gamma) const {
    return epsilon ? *epsilon : gamma / (10.0 * double(n));
}

void CurveConfig::validate() const {
    if (n == 0) {
        throw std::invalid_argument("curve: code length must be positive");
    }
    if (!(gamma_min > 0) || !(gamma_max > gamma_min) || gamma_max > 1) {
        throw std::invalid_argument("curve: need 0 < gamma-min < gamma-max <= 1");
    }
    if (points < 2) {
        throw std::invalid_argument("curve: need at least 2 grid points");
    }
    if (r_max < 3) {
        throw std::invalid_argument("curve: r-max must be at least 3");
    }
    if (epsilon) {
        check_probability(*epsilon, "epsilon");
    }
}

std::vector<double> log_grid(double lo, double hi, size_t points) {
    std::vector<double> out;
    double a = std::log10(lo);
    double b = std::log10(hi);
    for (size_t k = 0; k < points; k++) {
        out.push_back(k + 1 == points ? hi : std::pow(10.0, a + (b - a) * double(k) / double(points - 1)));
    }
    return out;
}

AnalysisPoint analyze_point(const CurveConfig &config, double gamma) {
    AnalysisPoint pt;
    pt.gamma = gamma;
    pt.epsilon = config.epsilon_for(gamma);
    RChoice choice = choose_r(config.n, config.t, config.c, gamma, pt.epsilon, config.r_max);
    pt.r = choice.r;
    pt.r_saturated = choice.saturated;
    pt.alpha = alpha_exact(config.n, gamma, pt.epsilon);
    pt.p1 = p1_literal(pt.r, pt.alpha);
    pt.p2 = p2(config.n, config.t, pt.r, config.c, std::min(1.0, gamma + double(config.n) * pt.epsilon));
    pt.p = std::min(1.0, 4 * (pt.p1 + pt.p2));
    return pt;
}

std::vector<AnalysisPoint> curve(const CurveConfig &config) {
    config.validate();
    std::vector<AnalysisPoint> out;
    for (double g : log_grid(config.gamma_min, config.gamma_max, config.points)) {
        out.push_back(analyze_point(config, g));
    }
    return out;
}

std::optional<double> break_even(const CurveConfig &config) {
    config.validate();
    auto excess = [&](double g) { return analyze_point(config, g).p - g; };
    auto grid = log_grid(config.gamma_min, config.gamma_max, config.points);
    for (size_t k = 0; k + 1 < grid.size(); k++) {
        if (excess(grid[k]) < 0 && excess(grid[k + 1]) >= 0) {
            double lo = std::log(grid[k]);
            double hi = std::log(grid[k + 1]);
            while (hi - lo > 1e-6) {
                double mid = 0.5 * (lo + hi);
                if (excess(std::exp(mid)) < 0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return std::exp(0.5 * (lo + hi));
        }
    }
    return std::nullopt;
}

std::optional<double> steps_supported(double p) {
    check_probability(p, "p");
    if (p == 0) {
        return std::nullopt;
    }
    return std::floor(1 / p);
}

std::string format_sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string curve_csv_header() {
    return "code,gamma,epsilon,r,alpha,p1,p2,p";
}

std::string curve_csv_row(const std::string &code, const AnalysisPoint &pt) {
    return code + "," + format_sig6(pt.gamma) + "," + format_sig6(pt.epsilon) + "," + std::to_string(pt.r) + "," + format_sig6(pt.alpha) + "," +
           format_sig6(pt.p1) + "," + format_sig6(pt.p2) + "," + format_sig6(pt.p);
}

}  // namespace qecstab
