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

#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace qecstab;

namespace {

PauliOperator pauli_from_index(size_t n, uint64_t index) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t digit = (index >> (2 * q)) & 3;
        p.x.set(q, digit & 1);
        p.z.set(q, digit & 2);
    }
    return p;
}

// Every element of the stabilizer group, phases dropped, as strings.
std::set<std::string> stabilizer_group(const StabilizerCode &code) {
    std::set<std::string> group;
    size_t m = code.num_generators();
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); mask++) {
        PauliOperator p(code.n);
        for (size_t i = 0; i < m; i++) {
            if (mask >> i & 1) {
                p *= code.generator(i).pauli;
            }
        }
        group.insert(p.to_string());
    }
    return group;
}

// Minimum weight over all 4^n Paulis that commute with every generator and lie outside the group.
size_t distance_oracle(const StabilizerCode &code) {
    auto group = stabilizer_group(code);
    size_t best = code.n + 1;
    for (uint64_t index = 1; index < (uint64_t{1} << (2 * code.n)); index++) {
        PauliOperator p = pauli_from_index(code.n, index);
        bool commutes = true;
        for (size_t i = 0; i < code.num_generators(); i++) {
            commutes &= p.commutes_with(code.generator(i).pauli);
        }
        if (commutes && !group.count(p.to_string())) {
            best = std::min(best, p.weight());
        }
    }
    return best;
}

bool commutation_invariant(const StabilizerCode &code) {
    BitMatrix lhs = code.hx * code.hz.transposed();
    BitMatrix rhs = code.hz * code.hx.transposed();
    for (size_t r = 0; r < lhs.num_rows(); r++) {
        if (lhs.row(r) != rhs.row(r)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(Pauli, parse_and_print) {
    auto p = PauliOperator::from_string("IXyZ_");
    EXPECT_EQ(p.to_string(), "IXYZI");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_THROW(PauliOperator::from_string("XQ"), std::invalid_argument);
    EXPECT_FALSE(PauliOperator::from_string("X").commutes_with(PauliOperator::from_string("Z")));
    EXPECT_TRUE(PauliOperator::from_string("XX").commutes_with(PauliOperator::from_string("ZZ")));
}

TEST(Pauli, signed_products) {
    // XX * ZZ = (XZ)(XZ) = (-iY)(-iY) = -YY.
    auto a = SignedPauli::from_string("XX");
    a *= SignedPauli::from_string("ZZ");
    EXPECT_EQ(a.to_string(), "-YY");
    auto b = SignedPauli::from_string("-YY");
    b *= SignedPauli::from_string("-XX");
    EXPECT_EQ(b.to_string(), "-ZZ");
    auto c = SignedPauli::from_string("X");
    EXPECT_THROW(c *= SignedPauli::from_string("Z"), std::invalid_argument);
}

TEST(Codes, five_qubit) {
    auto code = five_qubit_code();
    EXPECT_EQ(code.n, 5u);
    EXPECT_EQ(code.k, 1u);
    EXPECT_EQ(code.d, 3u);
    EXPECT_EQ(code.t, 1u);
    EXPECT_EQ(code.parameters(), "[[5,1,3]]");
    EXPECT_FALSE(code.is_css());
    EXPECT_TRUE(commutation_invariant(code));
    EXPECT_EQ(code.n - rank(code.stabilizer_matrix()), 1u);
    EXPECT_EQ(distance_oracle(code), 3u);
    EXPECT_EQ(distance_bruteforce(code), 3u);
}

TEST(Codes, steane_from_hamming) {
    auto code = css_from_classical(hamming7());
    EXPECT_EQ(code.parameters(), "[[7,1,3]]");
    EXPECT_TRUE(code.is_css());
    EXPECT_TRUE(commutation_invariant(code));
    EXPECT_EQ(distance_oracle(code), 3u);
    EXPECT_EQ(code_by_name("steane7"), code);
}

TEST(Codes, golay_from_classical) {
    auto classical = golay23();
    EXPECT_EQ(classical.parity_check.num_rows(), 11u);
    EXPECT_TRUE(is_self_orthogonal(classical.parity_check));
    // Every nonzero codeword of the [23,12] code has weight at least 7: check over all 4096 codewords.
    BitMatrix generator = nullspace_basis(classical.parity_check);
    ASSERT_EQ(generator.num_rows(), 12u);
    size_t min_weight = 23;
    for (uint64_t mask = 1; mask < 4096; mask++) {
        BitVector w(23);
        for (size_t i = 0; i < 12; i++) {
            if (mask >> i & 1) {
                w ^= generator.row(i);
            }
        }
        min_weight = std::min(min_weight, w.weight());
    }
    EXPECT_EQ(min_weight, 7u);

    auto code = css_from_classical(classical, 7);
    EXPECT_EQ(code.parameters(), "[[23,1,7]]");
    EXPECT_EQ(code.t, 3u);
    EXPECT_TRUE(commutation_invariant(code));
}

TEST(Codes, css_rejections) {
    ClassicalCode bad{"bad", 3, 2, BitMatrix::from_rows({"111"})};
    EXPECT_THROW(css_from_classical(bad), std::invalid_argument);
    ClassicalCode repetition{"rep", 4, 1, BitMatrix::from_rows({"1100", "0110", "0011"})};
    EXPECT_THROW(css_from_classical(repetition), std::invalid_argument);
    EXPECT_THROW(code_by_name("nope"), std::invalid_argument);
}

TEST(Codes, commutation_syndrome) {
    auto code = five_qubit_code();
    EXPECT_TRUE(commutation_syndrome(code, PauliOperator(5)).none());
    EXPECT_EQ(commutation_syndrome(code, PauliOperator::single(5, 0, 'X')).to_string(), "0101");
    EXPECT_EQ(commutation_syndrome(code, PauliOperator::single(5, 0, 'Z')).to_string(), "1000");
    EXPECT_THROW(commutation_syndrome(code, PauliOperator(4)), std::invalid_argument);

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; trial++) {
        auto a = pauli_from_index(5, rng() % 1024);
        auto b = pauli_from_index(5, rng() % 1024);
        EXPECT_EQ(commutation_syndrome(code, a * b), commutation_syndrome(code, a) ^ commutation_syndrome(code, b));
    }
}

TEST(Codes, single_errors_biject_onto_syndromes) {
    auto code = five_qubit_code();
    std::set<std::string> seen{commutation_syndrome(code, PauliOperator(5)).to_string()};
    for (size_t q = 0; q < 5; q++) {
        for (char c : {'X', 'Y', 'Z'}) {
            seen.insert(commutation_syndrome(code, PauliOperator::single(5, q, c)).to_string());
        }
    }
    EXPECT_EQ(seen.size(), 16u);
}

TEST(Codes, redundant_generator_keeps_distance) {
    auto base = five_qubit_code();
    BitMatrix hx = base.hx;
    BitMatrix hz = base.hz;
    hx.append_row(base.hx.row(0));
    hz.append_row(base.hz.row(0));
    auto code = make_stabilizer_code("dup", hx, hz);
    EXPECT_EQ(code.k, 1u);
    EXPECT_EQ(code.d, 3u);
}

TEST(Codes, logical_operators) {
    for (const auto &code : {five_qubit_code(), code_by_name("steane7"), code_by_name("golay23")}) {
        auto logical = logical_operators(code);
        ASSERT_EQ(logical.xs.size(), code.k);
        for (size_t i = 0; i < code.k; i++) {
            EXPECT_TRUE(code.is_nontrivial_logical(logical.xs[i]));
            EXPECT_TRUE(code.is_nontrivial_logical(logical.zs[i]));
            EXPECT_FALSE(logical.xs[i].commutes_with(logical.zs[i]));
            if (code.is_css()) {
                EXPECT_TRUE(logical.xs[i].z.none());
                EXPECT_TRUE(logical.zs[i].x.none());
            }
        }
    }
}

TEST(Codes, weight_enumeration_counts) {
    size_t count = 0;
    for_each_pauli_of_weight(5, 2, [&](const PauliOperator &p) {
        EXPECT_EQ(p.weight(), 2u);
        count++;
        return true;
    });
    EXPECT_EQ(count, 10u * 9u);
}

TEST(CodeFile, parse_paper_matrix) {
    auto code = parse_code_file("# [[5,1,3]] five_qubit\n11000|00101\n01100|10010\n00110|01001\n00011|10100\n");
    EXPECT_EQ(code, five_qubit_code());
    EXPECT_EQ(code.num_generators(), 4u);
}

TEST(CodeFile, round_trip) {
    for (const auto &name : registry_names()) {
        auto code = code_by_name(name);
        auto text = emit_code_file(code);
        auto back = parse_code_file(text);
        EXPECT_EQ(back, code);
        EXPECT_EQ(emit_code_file(back), text);
        EXPECT_EQ(back.is_css(), code.is_css());
    }
}

TEST(CodeFile, rejections) {
    try {
        parse_code_file("11|000\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
    }
    try {
        parse_code_file("# header\n10|00\n00|10\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("lines 2 and 3"), std::string::npos);
    }
    EXPECT_THROW(parse_code_file("110\n"), std::invalid_argument);
    EXPECT_THROW(parse_code_file("1|0\n11|00\n"), std::invalid_argument);
    EXPECT_THROW(parse_code_file(""), std::invalid_argument);
}
