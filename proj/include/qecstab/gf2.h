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

#ifndef QECSTAB_GF2_H
#define QECSTAB_GF2_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qecstab {

/// Fixed-length vector over GF(2), bit-packed into 64-bit words.
///
/// Position 0 is the leftmost character of the printed form, so "0101" has bits 1 and 3 set.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on anything else.
    static BitVector from_string(std::string_view text);
    /// Unit vector e_index of the given length.
    static BitVector unit(size_t num_bits, size_t index);
    /// Little-endian integer view: bit i of the vector is bit i of `value`.
    static BitVector from_uint64(size_t num_bits, uint64_t value);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    bool operator[](size_t index) const {
        return get(index);
    }
    void set(size_t index, bool value);
    void flip(size_t index) {
        words_[index >> 6] ^= uint64_t{1} << (index & 63);
    }
    void clear();

    size_t weight() const;
    bool none() const;
    bool any() const {
        return !none();
    }
    /// Packs the vector into an integer (bit i -> 2^i). Requires size() <= 64.
    uint64_t to_uint64() const;
    std::string to_string() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;

    bool operator==(const BitVector &other) const = default;
    /// Lexicographic order of the printed form.
    bool operator<(const BitVector &other) const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Inner product mod 2. Throws std::invalid_argument on length mismatch.
bool dot(const BitVector &a, const BitVector &b);

/// Concatenation a|b.
BitVector concat(const BitVector &a, const BitVector &b);

/// Dense row-major matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);

    static BitMatrix identity(size_t n);
    /// Each string is one row; all rows must have the same length.
    static BitMatrix from_rows(const std::vector<std::string> &rows);
    static BitMatrix from_rows(std::vector<BitVector> rows, size_t num_cols);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value) {
        rows_[r].set(c, value);
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    BitVector column(size_t c) const;

    void append_row(const BitVector &row);
    BitMatrix transposed() const;
    bool is_zero() const;

    /// One line per row, '0'/'1' characters.
    std::string to_string() const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

BitMatrix operator*(const BitMatrix &a, const BitMatrix &b);
/// Side-by-side [a | b].
BitMatrix hstack(const BitMatrix &a, const BitMatrix &b);
/// Rows of a followed by rows of b.
BitMatrix vstack(const BitMatrix &a, const BitMatrix &b);

struct RrefResult {
    BitMatrix reduced;
    std::vector<size_t> pivots;
};

size_t rank(const BitMatrix &m);
RrefResult rref(const BitMatrix &m);
/// Basis of {v : m v^T = 0}, one vector per row.
BitMatrix nullspace_basis(const BitMatrix &m);
/// True iff every pair of rows (a row with itself included) has even overlap.
bool is_self_orthogonal(const BitMatrix &h);
/// Bit i of the result is <row i of h, v> mod 2. Throws std::invalid_argument on length mismatch.
BitVector mat_vec_syndrome(const BitMatrix &h, const BitVector &v);

/// Incremental membership test for the row space of a matrix.
class RowSpace {
   public:
    RowSpace() = default;
    explicit RowSpace(const BitMatrix &generators);

    size_t dimension() const {
        return basis_.size();
    }
    /// Reduces v against the basis; the result is zero iff v is in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const;
    /// Adds v to the spanning set. Returns false if it was already in the span.
    bool insert(const BitVector &v);

   private:
    std::vector<BitVector> basis_;
    std::vector<size_t> pivots_;
};

/// Parses the text matrix format: one row per line of '0'/'1' characters. Blank lines and lines
/// starting with '#' are skipped; '|' separators are dropped.
BitMatrix parse_bit_matrix(std::string_view text);

}  // namespace qecstab

#endif
