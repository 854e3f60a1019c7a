#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

// Bit-packed linear algebra over GF(2). A vector of up to 64 coordinates is a
// single machine word; bits above `length` are kept zero.

namespace mincw::gf2 {

using Word = std::uint64_t;

inline constexpr int kMaxBits = 64;

inline Word length_mask(int length) {
    return length == kMaxBits ? ~Word{0} : (Word{1} << length) - 1;
}

struct RankDeficient : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BitVec {
    Word bits = 0;
    int length = 0;

    BitVec() = default;
    BitVec(Word b, int len) : bits(b & length_mask(len)), length(len) {
        if (len < 0 || len > kMaxBits) throw std::invalid_argument("BitVec length out of range");
    }

    int weight() const { return std::popcount(bits); }
    bool get(int i) const { return (bits >> i) & 1; }
    bool is_zero() const { return bits == 0; }

    friend bool operator==(const BitVec&, const BitVec&) = default;
};

struct BitMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Word> row_data;  // one word per row, canonical padding

    BitMatrix() = default;
    BitMatrix(int r, int c) : rows(r), cols(c), row_data(static_cast<std::size_t>(r), 0) {
        if (r < 0 || c < 0 || c > kMaxBits) throw std::invalid_argument("BitMatrix shape out of range");
    }
    BitMatrix(int c, std::vector<Word> data)
        : rows(static_cast<int>(data.size())), cols(c), row_data(std::move(data)) {
        if (c < 0 || c > kMaxBits) throw std::invalid_argument("BitMatrix cols out of range");
        const Word mask = length_mask(c);
        for (Word& w : row_data) w &= mask;
    }

    Word row(int i) const { return row_data[static_cast<std::size_t>(i)]; }
    Word& row(int i) { return row_data[static_cast<std::size_t>(i)]; }
    bool get(int r, int c) const { return (row(r) >> c) & 1; }
    void set(int r, int c, bool v) {
        if (v) row(r) |= Word{1} << c;
        else row(r) &= ~(Word{1} << c);
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
};

/// Dimension of the row space.
int rank(const BitMatrix& m);

/// Rank of the matrix restricted to the columns selected by `col_mask`.
int rank_on_columns(const BitMatrix& m, Word col_mask);

struct RrefResult {
    BitMatrix matrix;
    std::vector<int> pivot_columns;  // strictly increasing
};

/// Reduced row echelon form; pivots chosen at the lowest available column index.
RrefResult rref(const BitMatrix& m);

/// Basis of {x : m x^T = 0}, one row per basis vector; row count = cols - rank.
BitMatrix kernel_basis(const BitMatrix& m);

struct SystematicForm {
    BitMatrix matrix;                 // [I | A]
    std::vector<int> column_permutation;  // matrix column j = input column column_permutation[j]
};

/// Column permutation bringing a full-row-rank matrix to [I | A].
/// Throws RankDeficient when rank < rows.
SystematicForm systematic_form(const BitMatrix& g);

/// (n-k) x n parity check h with g h^T = 0, from a full-rank k x n generator.
BitMatrix parity_check_from_generator(const BitMatrix& g);

/// Applies a column permutation: result column j = m column perm[j].
BitMatrix permute_columns(const BitMatrix& m, const std::vector<int>& perm);

}  // namespace mincw::gf2
