#pragma once

#include <vector>

#include "superaudit/gaussian.hpp"

namespace superaudit::linalg {

using Vec = std::vector<GaussianRational>;
using Mat = std::vector<Vec>;  // row-major, rectangular

// Reduced row echelon form in place, exact arithmetic, pivot = first nonzero
// entry scanning rows top-down in each column. Returns pivot columns.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Deterministic nullspace basis: one vector per free column in ascending
// order, with the free coordinate normalized to 1.
std::vector<Vec> nullspace(Mat m);

struct SolveResult {
    bool consistent = false;
    bool unique = false;
    Vec solution;  // one particular solution when consistent (free vars 0)
};

// Exact solution of A x = b.
SolveResult solve(const Mat& a, const Vec& b);

}  // namespace superaudit::linalg
