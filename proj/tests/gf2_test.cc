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

#include "qecstab/gf2.h"

#include <random>

#include "gtest/gtest.h"

using namespace qecstab;

namespace {

BitMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols) {
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

// Rank by counting the distinct vectors in the row span.
size_t span_rank_oracle(const BitMatrix &m) {
    std::vector<uint64_t> span{0};
    for (const auto &row : m.rows()) {
        uint64_t v = 0;
        for (size_t c = 0; c < m.num_cols(); c++) {
            v |= uint64_t(row[c]) << c;
        }
        bool present = false;
        for (uint64_t s : span) {
            present |= s == v;
        }
        if (!present) {
            size_t size = span.size();
            for (size_t i = 0; i < size; i++) {
                span.push_back(span[i] ^ v);
            }
        }
    }
    size_t r = 0;
    while ((size_t{1} << r) < span.size()) {
        r++;
    }
    return r;
}

}  // namespace

TEST(BitVector, string_round_trip) {
    auto v = BitVector::from_string("0110100");
    EXPECT_EQ(v.size(), 7u);
    EXPECT_EQ(v.weight(), 3u);
    EXPECT_TRUE(v[1]);
    EXPECT_FALSE(v[0]);
    EXPECT_EQ(v.to_string(), "0110100");
    EXPECT_THROW(BitVector::from_string("01a"), std::invalid_argument);
}

TEST(BitVector, wide_vectors) {
    BitVector v(130);
    v.set(0, true);
    v.set(64, true);
    v.set(129, true);
    EXPECT_EQ(v.weight(), 3u);
    BitVector w = v;
    w.flip(129);
    EXPECT_EQ((v ^ w).weight(), 1u);
    EXPECT_TRUE(dot(v, v));
    EXPECT_THROW(dot(v, BitVector(3)), std::invalid_argument);
}

TEST(BitMatrix, rank_small_cases) {
    EXPECT_EQ(rank(BitMatrix::identity(4)), 4u);
    EXPECT_EQ(rank(BitMatrix(3, 5)), 0u);
    BitMatrix eq2 = BitMatrix::from_rows({"1100000101", "0110010010", "0011001001", "0001110100"});
    EXPECT_EQ(rank(eq2), span_rank_oracle(eq2));
    EXPECT_EQ(rank(eq2), 4u);
}

TEST(BitMatrix, rref_cases) {
    auto id = rref(BitMatrix::identity(3));
    EXPECT_EQ(id.reduced, BitMatrix::identity(3));
    EXPECT_EQ(id.pivots, (std::vector<size_t>{0, 1, 2}));

    auto dup = rref(BitMatrix::from_rows({"11", "11"}));
    EXPECT_EQ(dup.reduced, BitMatrix::from_rows({"11", "00"}));
    EXPECT_EQ(dup.pivots, (std::vector<size_t>{0}));
}

TEST(BitMatrix, rref_preserves_rank_and_row_space) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        BitMatrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 10);
        auto res = rref(m);
        size_t r = span_rank_oracle(m);
        EXPECT_EQ(rank(m), r);
        EXPECT_EQ(rank(res.reduced), r);
        EXPECT_EQ(res.pivots.size(), r);
        RowSpace a(m);
        RowSpace b(res.reduced);
        for (const auto &row : res.reduced.rows()) {
            EXPECT_TRUE(a.contains(row));
        }
        for (const auto &row : m.rows()) {
            EXPECT_TRUE(b.contains(row));
        }
    }
}

TEST(BitMatrix, nullspace) {
    EXPECT_EQ(nullspace_basis(BitMatrix::identity(4)).num_rows(), 0u);
    EXPECT_EQ(nullspace_basis(BitMatrix(2, 3)).num_rows(), 3u);

    BitMatrix h = BitMatrix::from_rows({"1110100", "0111010", "0011101"});
    BitMatrix basis = nullspace_basis(h);
    EXPECT_EQ(basis.num_rows(), 4u);
    // Exhaustive codeword count: the basis must span exactly the 16 annihilated words.
    size_t annihilated = 0;
    RowSpace span(basis);
    for (uint64_t w = 0; w < 128; w++) {
        BitVector v = BitVector::from_uint64(7, w);
        bool zero = mat_vec_syndrome(h, v).none();
        annihilated += zero;
        EXPECT_EQ(zero, span.contains(v));
    }
    EXPECT_EQ(annihilated, 16u);
}

TEST(BitMatrix, nullspace_random_property) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        BitMatrix m = random_matrix(rng, rng() % 6, 1 + rng() % 12);
        BitMatrix basis = nullspace_basis(m);
        EXPECT_EQ(basis.num_rows(), m.num_cols() - span_rank_oracle(m));
        EXPECT_EQ(span_rank_oracle(basis), basis.num_rows());
        for (const auto &row : basis.rows()) {
            EXPECT_TRUE(mat_vec_syndrome(m, row).none());
        }
    }
}

TEST(BitMatrix, self_orthogonality) {
    EXPECT_TRUE(is_self_orthogonal(BitMatrix::from_rows({"1111"})));
    EXPECT_FALSE(is_self_orthogonal(BitMatrix::from_rows({"111"})));
    EXPECT_TRUE(is_self_orthogonal(BitMatrix::from_rows({"1110100", "0111010", "0011101"})));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; trial++) {
        BitMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 12);
        bool expected = true;
        for (size_t a = 0; a < m.num_rows(); a++) {
            for (size_t b = 0; b < m.num_rows(); b++) {
                size_t overlap = 0;
                for (size_t c = 0; c < m.num_cols(); c++) {
                    overlap += m.get(a, c) && m.get(b, c);
                }
                expected &= overlap % 2 == 0;
            }
        }
        EXPECT_EQ(is_self_orthogonal(m), expected);
    }
}

TEST(BitMatrix, syndrome) {
    BitMatrix hz = BitMatrix::from_rows({"00101", "10010", "01001", "10100"});
    EXPECT_EQ(mat_vec_syndrome(hz, BitVector::from_string("10000")).to_string(), "0101");
    EXPECT_TRUE(mat_vec_syndrome(hz, BitVector(5)).none());
    EXPECT_EQ(mat_vec_syndrome(BitMatrix::identity(5), BitVector::from_string("10110")).to_string(), "10110");
    EXPECT_THROW(mat_vec_syndrome(hz, BitVector(4)), std::invalid_argument);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; trial++) {
        BitMatrix h = random_matrix(rng, 5, 9);
        BitVector u = random_matrix(rng, 1, 9).row(0);
        BitVector v = random_matrix(rng, 1, 9).row(0);
        EXPECT_EQ(mat_vec_syndrome(h, u ^ v), mat_vec_syndrome(h, u) ^ mat_vec_syndrome(h, v));
    }
}

TEST(BitMatrix, empty_shapes) {
    BitMatrix none(0, 4);
    EXPECT_EQ(rank(none), 0u);
    EXPECT_EQ(nullspace_basis(none).num_rows(), 4u);
    BitMatrix no_cols(3, 0);
    EXPECT_EQ(rank(no_cols), 0u);
    EXPECT_EQ(nullspace_basis(no_cols).num_rows(), 0u);
    EXPECT_TRUE(is_self_orthogonal(none));
}

TEST(BitMatrix, parse_text) {
    auto m = parse_bit_matrix("# comment\n11000|00101\n\n01100|10010\n");
    EXPECT_EQ(m.num_rows(), 2u);
    EXPECT_EQ(m.num_cols(), 10u);
    EXPECT_EQ(m.row(1).to_string(), "0110010010");
    EXPECT_THROW(parse_bit_matrix("101\n10\n"), std::invalid_argument);
    EXPECT_THROW(parse_bit_matrix("10x\n"), std::invalid_argument);
}
