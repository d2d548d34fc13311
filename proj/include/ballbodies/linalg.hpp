#pragma once

#include <cmath>
#include <vector>

namespace bb {

// Solves the dense n x n system A x = b in place by Gaussian elimination with
// partial pivoting. A is row-major. Returns false if a pivot falls below tol
// (system treated as singular).
inline bool solve_linear(std::vector<double>& A, std::vector<double>& b, int n,
                         double tol = 1e-12) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::fabs(A[col * n + col]);
        for (int row = col + 1; row < n; ++row) {
            const double v = std::fabs(A[row * n + col]);
            if (v > best) {
                best = v;
                piv = row;
            }
        }
        if (best < tol) return false;
        if (piv != col) {
            for (int k = col; k < n; ++k) std::swap(A[col * n + k], A[piv * n + k]);
            std::swap(b[col], b[piv]);
        }
        const double d = A[col * n + col];
        for (int row = col + 1; row < n; ++row) {
            const double f = A[row * n + col] / d;
            if (f == 0.0) continue;
            for (int k = col; k < n; ++k) A[row * n + k] -= f * A[col * n + k];
            b[row] -= f * b[col];
        }
    }
    for (int row = n - 1; row >= 0; --row) {
        double s = b[row];
        for (int k = row + 1; k < n; ++k) s -= A[row * n + k] * b[k];
        b[row] = s / A[row * n + row];
    }
    return true;
}

}  // namespace bb
