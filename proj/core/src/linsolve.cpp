#include "seqform/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace seqform {

std::vector<int> rref(qmatrix& m) {
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    const int rows = (int)m.size();
    const int cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(m[r], m[pivot]);
        rational inv = m[r][c].inverse();
        for (int j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            rational f = m[i][c];
            for (int j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::optional<std::vector<rational>> solve(const qmatrix& a, const std::vector<rational>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("solve: dimension mismatch");
    if (a.empty())
        return std::vector<rational>{};
    const int cols = (int)a[0].size();
    qmatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i)
        aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug);
    // pivot in the augmented column means 0 = 1
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    std::vector<rational> x((std::size_t)cols, rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[(std::size_t)pivots[i]] = aug[i][(std::size_t)cols];
    return x;
}

std::vector<std::vector<rational>> nullspace(const qmatrix& a, int ncols) {
    qmatrix m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot((std::size_t)ncols, false);
    for (int c : pivots)
        is_pivot[(std::size_t)c] = true;
    std::vector<std::vector<rational>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[(std::size_t)free])
            continue;
        std::vector<rational> v((std::size_t)ncols, rational(0));
        v[(std::size_t)free] = rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[(std::size_t)pivots[i]] = -m[i][(std::size_t)free];
        basis.push_back(std::move(v));
    }
    return basis;
}

rational determinant(qmatrix m) {
    const int n = (int)m.size();
    for (const auto& row : m)
        if ((int)row.size() != n)
            throw std::invalid_argument("determinant: matrix not square");
    rational det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i) {
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            return rational(0);
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            det = -det;
        }
        det *= m[c][c];
        rational inv = m[c][c].inverse();
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero())
                continue;
            rational f = m[i][c] * inv;
            for (int j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

} // namespace seqform
