#include "superaudit/linalg.hpp"

#include <stdexcept>

namespace superaudit::linalg {

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        GaussianRational inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(Mat m) {
    return static_cast<int>(rref(m).size());
}

std::vector<Vec> nullspace(Mat m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<int> pivot_of_col(cols, -1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        pivot_of_col[static_cast<std::size_t>(pivots[k])] = static_cast<int>(k);

    std::vector<Vec> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(cols, GaussianRational(0));
        v[c] = GaussianRational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<std::size_t>(pivots[k])] = -m[k][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const Mat& a, const Vec& b) {
    SolveResult res;
    const std::size_t rows = a.size();
    if (rows != b.size()) throw std::invalid_argument("linalg::solve: shape mismatch");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();

    Mat aug(rows, Vec(cols + 1, GaussianRational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == static_cast<int>(cols)) return res;  // 0 = 1 row: inconsistent
    res.consistent = true;
    res.unique = pivots.size() == cols;
    res.solution.assign(cols, GaussianRational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        res.solution[static_cast<std::size_t>(pivots[k])] = aug[k][cols];
    return res;
}

}  // namespace superaudit::linalg
