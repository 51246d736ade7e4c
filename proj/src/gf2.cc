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

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace qecstab {

namespace {

size_t words_for(size_t num_bits) {
    return (num_bits + 63) / 64;
}

void require_same_size(const BitVector &a, const BitVector &b, const char *what) {
    if (a.size() != b.size()) {
        std::stringstream ss;
        ss << what << ": length mismatch (" << a.size() << " vs " << b.size() << ")";
        throw std::invalid_argument(ss.str());
    }
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view text) {
    BitVector result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result.flip(k);
        } else if (text[k] != '0') {
            throw std::invalid_argument("bit string contains a character other than '0' or '1': '" + std::string(text) + "'");
        }
    }
    return result;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    BitVector result(num_bits);
    result.flip(index);
    return result;
}

BitVector BitVector::from_uint64(size_t num_bits, uint64_t value) {
    if (num_bits > 64) {
        throw std::invalid_argument("from_uint64 requires at most 64 bits");
    }
    BitVector result(num_bits);
    if (num_bits > 0) {
        uint64_t mask = num_bits == 64 ? ~uint64_t{0} : ((uint64_t{1} << num_bits) - 1);
        result.words_[0] = value & mask;
    }
    return result;
}

void BitVector::set(size_t index, bool value) {
    uint64_t bit = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= bit;
    } else {
        words_[index >> 6] &= ~bit;
    }
}

void BitVector::clear() {
    std::fill(words_.begin(), words_.end(), 0);
}

size_t BitVector::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::none() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

uint64_t BitVector::to_uint64() const {
    if (num_bits_ > 64) {
        throw std::invalid_argument("to_uint64 requires at most 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BitVector::to_string() const {
    std::string result(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            result[k] = '1';
        }
    }
    return result;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other, "xor");
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other, "and");
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector result = *this;
    result ^= other;
    return result;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector result = *this;
    result &= other;
    return result;
}

bool BitVector::operator<(const BitVector &other) const {
    size_t n = std::min(num_bits_, other.num_bits_);
    for (size_t k = 0; k < n; k++) {
        bool a = get(k);
        bool b = other.get(k);
        if (a != b) {
            return b;
        }
    }
    return num_bits_ < other.num_bits_;
}

bool dot(const BitVector &a, const BitVector &b) {
    require_same_size(a, b, "dot");
    uint64_t acc = 0;
    const auto &wa = a.words();
    const auto &wb = b.words();
    for (size_t k = 0; k < wa.size(); k++) {
        acc ^= wa[k] & wb[k];
    }
    return std::popcount(acc) & 1;
}

BitVector concat(const BitVector &a, const BitVector &b) {
    BitVector result(a.size() + b.size());
    for (size_t k = 0; k < a.size(); k++) {
        if (a[k]) {
            result.flip(k);
        }
    }
    for (size_t k = 0; k < b.size(); k++) {
        if (b[k]) {
            result.flip(a.size() + k);
        }
    }
    return result;
}

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        result.set(k, k, true);
    }
    return result;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    std::vector<BitVector> parsed;
    parsed.reserve(rows.size());
    for (const auto &r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    size_t cols = parsed.empty() ? 0 : parsed[0].size();
    return from_rows(std::move(parsed), cols);
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, size_t num_cols) {
    for (const auto &r : rows) {
        if (r.size() != num_cols) {
            throw std::invalid_argument("matrix rows have inconsistent lengths");
        }
    }
    BitMatrix result;
    result.num_cols_ = num_cols;
    result.rows_ = std::move(rows);
    return result;
}

BitVector BitMatrix::column(size_t c) const {
    BitVector result(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r][c]) {
            result.flip(r);
        }
    }
    return result;
}

void BitMatrix::append_row(const BitVector &row) {
    if (row.size() != num_cols_) {
        if (!rows_.empty() || num_cols_ != 0) {
            throw std::invalid_argument("append_row: length mismatch");
        }
        num_cols_ = row.size();
    }
    rows_.push_back(row);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix result(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < num_cols_; c++) {
            if (rows_[r][c]) {
                result.set(c, r, true);
            }
        }
    }
    return result;
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector &r) { return r.none(); });
}

std::string BitMatrix::to_string() const {
    std::string result;
    for (const auto &r : rows_) {
        result += r.to_string();
        result += '\n';
    }
    return result;
}

BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
    if (a.num_cols() != b.num_rows()) {
        throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    BitMatrix result(a.num_rows(), b.num_cols());
    for (size_t r = 0; r < a.num_rows(); r++) {
        for (size_t k = 0; k < a.num_cols(); k++) {
            if (a.get(r, k)) {
                result.row(r) ^= b.row(k);
            }
        }
    }
    return result;
}

BitMatrix hstack(const BitMatrix &a, const BitMatrix &b) {
    if (a.num_rows() != b.num_rows()) {
        throw std::invalid_argument("hstack: row counts differ");
    }
    std::vector<BitVector> rows;
    rows.reserve(a.num_rows());
    for (size_t r = 0; r < a.num_rows(); r++) {
        rows.push_back(concat(a.row(r), b.row(r)));
    }
    return BitMatrix::from_rows(std::move(rows), a.num_cols() + b.num_cols());
}

BitMatrix vstack(const BitMatrix &a, const BitMatrix &b) {
    if (a.num_rows() == 0) {
        return b;
    }
    if (b.num_rows() == 0) {
        return a;
    }
    if (a.num_cols() != b.num_cols()) {
        throw std::invalid_argument("vstack: column counts differ");
    }
    std::vector<BitVector> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return BitMatrix::from_rows(std::move(rows), a.num_cols());
}

RrefResult rref(const BitMatrix &m) {
    RrefResult result{m, {}};
    BitMatrix &a = result.reduced;
    size_t pivot_row = 0;
    for (size_t c = 0; c < a.num_cols() && pivot_row < a.num_rows(); c++) {
        size_t found = pivot_row;
        while (found < a.num_rows() && !a.get(found, c)) {
            found++;
        }
        if (found == a.num_rows()) {
            continue;
        }
        std::swap(a.row(found), a.row(pivot_row));
        for (size_t r = 0; r < a.num_rows(); r++) {
            if (r != pivot_row && a.get(r, c)) {
                a.row(r) ^= a.row(pivot_row);
            }
        }
        result.pivots.push_back(c);
        pivot_row++;
    }
    return result;
}

size_t rank(const BitMatrix &m) {
    return rref(m).pivots.size();
}

BitMatrix nullspace_basis(const BitMatrix &m) {
    RrefResult r = rref(m);
    size_t n = m.num_cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix basis(0, n);
    for (size_t free_col = 0; free_col < n; free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        BitVector v(n);
        v.set(free_col, true);
        for (size_t k = 0; k < r.pivots.size(); k++) {
            if (r.reduced.get(k, free_col)) {
                v.set(r.pivots[k], true);
            }
        }
        basis.append_row(v);
    }
    return basis;
}

bool is_self_orthogonal(const BitMatrix &h) {
    for (size_t a = 0; a < h.num_rows(); a++) {
        for (size_t b = a; b < h.num_rows(); b++) {
            if (dot(h.row(a), h.row(b))) {
                return false;
            }
        }
    }
    return true;
}

BitVector mat_vec_syndrome(const BitMatrix &h, const BitVector &v) {
    if (v.size() != h.num_cols()) {
        std::stringstream ss;
        ss << "mat_vec_syndrome: vector has length " << v.size() << " but matrix has " << h.num_cols() << " columns";
        throw std::invalid_argument(ss.str());
    }
    BitVector result(h.num_rows());
    for (size_t r = 0; r < h.num_rows(); r++) {
        if (dot(h.row(r), v)) {
            result.flip(r);
        }
    }
    return result;
}

RowSpace::RowSpace(const BitMatrix &generators) {
    for (const auto &r : generators.rows()) {
        insert(r);
    }
}

BitVector RowSpace::reduce(BitVector v) const {
    for (size_t k = 0; k < basis_.size(); k++) {
        if (v[pivots_[k]]) {
            v ^= basis_[k];
        }
    }
    return v;
}

bool RowSpace::contains(const BitVector &v) const {
    return reduce(v).none();
}

bool RowSpace::insert(const BitVector &v) {
    BitVector reduced = reduce(v);
    size_t pivot = 0;
    while (pivot < reduced.size() && !reduced[pivot]) {
        pivot++;
    }
    if (pivot == reduced.size()) {
        return false;
    }
    // Keep the basis fully reduced at pivot columns so reduce() is a single pass.
    for (auto &b : basis_) {
        if (b[pivot]) {
            b ^= reduced;
        }
    }
    basis_.push_back(std::move(reduced));
    pivots_.push_back(pivot);
    return true;
}

BitMatrix parse_bit_matrix(std::string_view text) {
    BitMatrix result;
    size_t line_number = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        line_number++;
        std::string bits;
        for (char ch : line) {
            if (ch == '#') {
                break;
            }
            if (ch == '0' || ch == '1') {
                bits += ch;
            } else if (ch != '|' && ch != ' ' && ch != '\t' && ch != '\r') {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": unexpected character '" + ch + "'");
            }
        }
        if (!bits.empty()) {
            if (result.num_rows() > 0 && bits.size() != result.num_cols()) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": row length differs from earlier rows");
            }
            result.append_row(BitVector::from_string(bits));
        }
        if (end == text.size()) {
            break;
        }
    }
    return result;
}

}  // namespace qecstab
