#include "mincw/gf2.hpp"

#include <algorithm>

namespace mincw::gf2 {

int rank(const BitMatrix& m) {
    std::vector<Word> rows = m.row_data;
    int r = 0;
    for (int c = 0; c < m.cols && r < static_cast<int>(rows.size()); ++c) {
        const Word bit = Word{1} << c;
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (rows[static_cast<std::size_t>(i)] & bit) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot)]);
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[static_cast<std::size_t>(i)] & bit) rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
        }
        ++r;
    }
    return r;
}

int rank_on_columns(const BitMatrix& m, Word col_mask) {
    col_mask &= length_mask(m.cols);
    // Pivot rows indexed by their lowest set bit.
    Word pivots[kMaxBits] = {};
    int r = 0;
    for (Word w : m.row_data) {
        w &= col_mask;
        while (w != 0) {
            const int lead = std::countr_zero(w);
            if (pivots[lead] == 0) {
                pivots[lead] = w;
                ++r;
                break;
            }
            w ^= pivots[lead];
        }
    }
    return r;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.matrix = m;
    auto& rows = res.matrix.row_data;
    int r = 0;
    for (int c = 0; c < m.cols && r < static_cast<int>(rows.size()); ++c) {
        const Word bit = Word{1} << c;
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (rows[static_cast<std::size_t>(i)] & bit) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pivot)]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i != r && (rows[static_cast<std::size_t>(i)] & bit)) rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
        }
        res.pivot_columns.push_back(c);
        ++r;
    }
    return res;
}

BitMatrix kernel_basis(const BitMatrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : rr.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;

    BitMatrix basis(0, m.cols);
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Word v = Word{1} << f;
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
            if (rr.matrix.row(static_cast<int>(i)) & (Word{1} << f))
                v |= Word{1} << rr.pivot_columns[i];
        }
        basis.row_data.push_back(v);
        ++basis.rows;
    }
    return basis;
}

SystematicForm systematic_form(const BitMatrix& g) {
    const RrefResult rr = rref(g);
    if (static_cast<int>(rr.pivot_columns.size()) != g.rows)
        throw RankDeficient("systematic_form: generator is rank deficient");

    std::vector<int> perm = rr.pivot_columns;
    std::vector<bool> is_pivot(static_cast<std::size_t>(g.cols), false);
    for (int c : rr.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < g.cols; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) perm.push_back(c);
    }

    SystematicForm sf;
    sf.matrix = permute_columns(rr.matrix, perm);
    sf.column_permutation = std::move(perm);
    return sf;
}

BitMatrix parity_check_from_generator(const BitMatrix& g) {
    const SystematicForm sf = systematic_form(g);
    const int k = g.rows;
    const int n = g.cols;

    // [A^T | I_{n-k}] in the permuted coordinates, then undo the permutation.
    BitMatrix h(n - k, n);
    for (int i = 0; i < n - k; ++i) {
        Word row = Word{1} << (k + i);
        for (int j = 0; j < k; ++j) {
            if (sf.matrix.get(j, k + i)) row |= Word{1} << j;
        }
        h.row(i) = row;
    }

    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) inverse[static_cast<std::size_t>(sf.column_permutation[static_cast<std::size_t>(j)])] = j;
    return permute_columns(h, inverse);
}

BitMatrix permute_columns(const BitMatrix& m, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != m.cols)
        throw std::invalid_argument("permute_columns: permutation size mismatch");
    BitMatrix out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        Word w = 0;
        for (int j = 0; j < m.cols; ++j) {
            if (m.get(i, perm[static_cast<std::size_t>(j)])) w |= Word{1} << j;
        }
        out.row(i) = w;
    }
    return out;
}

}  // namespace mincw::gf2
