#include "hameig/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hameig {

std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    }

    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
        std::size_t pivot_row = next_row;
        while (pivot_row < rows && m[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(m[next_row], m[pivot_row]);

        const Rat pivot = m[next_row][col];
        for (std::size_t c = col; c < cols; ++c) m[next_row][c] /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row || m[r][col] == 0) continue;
            const Rat factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] -= factor * m[next_row][c];
            }
        }
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

RatMatrix kernel_basis(RatMatrix m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    const std::vector<std::size_t> pivots = rref(m);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    RatMatrix basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row) {
            v[pivots[row]] = -m[row][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hameig
