#include "xladder/linalg.hpp"

#include <algorithm>

namespace xladder {

LinearSolution solve_linear(std::vector<std::vector<AlphaRat>> m, std::vector<AlphaRat> b) {
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();

    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && m[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[row]);
        std::swap(b[pr], b[row]);
        const AlphaRat inv = m[row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const AlphaRat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }

    LinearSolution out;
    for (size_t i = row; i < rows; ++i) {
        if (!b[i].is_zero()) return out;  // inconsistent: particular stays empty
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<AlphaRat> particular(cols, AlphaRat(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
        particular[static_cast<size_t>(pivot_col_of_row[i])] = b[i];
    }
    out.particular = std::move(particular);

    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<AlphaRat> v(cols, AlphaRat(0));
        v[free_col] = AlphaRat(1);
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
            v[static_cast<size_t>(pivot_col_of_row[i])] = -m[i][free_col];
        }
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

} // namespace xladder
