#pragma once

// Dense exact linear algebra over a prime field F_p. Internal workhorse for
// the public nullspace/rank/inverse operations and the nucleus solvers.
// Deterministic throughout: first-nonzero pivoting, ascending column order.

#include <optional>
#include <vector>

#include "semifield/errors.hpp"

namespace semifield::fpla {

inline int norm_mod(long long v, int p) {
    int r = static_cast<int>(v % p);
    return r < 0 ? r + p : r;
}

int inv_mod(int a, int p);

/// Row-major dense matrix over F_p (entries kept in [0, p)).
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    Mat(int r, int c, std::vector<int> data) : rows(r), cols(c), a(std::move(data)) {}

    int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const Mat&) const = default;
};

/// In-place reduced row echelon form. Returns the rank; pivot columns of the
/// leading rows are appended to `pivots` when given.
int rref(Mat& m, int p, std::vector<int>* pivots = nullptr);

/// RREF of [m | I]; on return `transform` satisfies echelon = transform * m.
int rref_with_transform(Mat& m, int p, std::vector<int>* pivots, Mat& transform);

int rank(Mat m, int p);

Mat mul(const Mat& a, const Mat& b, int p);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m, int p);

/// Deterministic basis of {v : m v = 0}, one vector per free column in
/// ascending column order. The basis list itself is in reduced echelon form
/// up to sign conventions (free coordinate set to 1).
std::vector<std::vector<int>> nullspace(Mat m, int p);

/// Unique solution of m x = rhs for square nonsingular m; nullopt otherwise.
std::optional<std::vector<int>> solve(Mat m, std::vector<int> rhs, int p);

}  // namespace semifield::fpla
