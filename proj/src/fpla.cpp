#include "semifield/fpla.hpp"

namespace semifield::fpla {

int inv_mod(int a, int p) {
    a = norm_mod(a, p);
    if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 mod p");
    int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return norm_mod(t, p);
}

namespace {

// Shared elimination kernel; eliminates in-place on `m`, mirroring all row
// operations onto `aug` when it is non-null (same row count).
int rref_impl(Mat& m, int p, std::vector<int>* pivots, Mat* aug) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
            if (aug) {
                for (int c = 0; c < aug->cols; ++c) std::swap(aug->at(pivot, c), aug->at(rank, c));
            }
        }
        int inv = inv_mod(m.at(rank, col), p);
        if (inv != 1) {
            for (int c = col; c < m.cols; ++c) {
                m.at(rank, c) = norm_mod(static_cast<long long>(m.at(rank, c)) * inv, p);
            }
            if (aug) {
                for (int c = 0; c < aug->cols; ++c) {
                    aug->at(rank, c) = norm_mod(static_cast<long long>(aug->at(rank, c)) * inv, p);
                }
            }
        }
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            int f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols; ++c) {
                m.at(r, c) = norm_mod(m.at(r, c) - static_cast<long long>(f) * m.at(rank, c), p);
            }
            if (aug) {
                for (int c = 0; c < aug->cols; ++c) {
                    aug->at(r, c) = norm_mod(aug->at(r, c) - static_cast<long long>(f) * aug->at(rank, c), p);
                }
            }
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

}  // namespace

int rref(Mat& m, int p, std::vector<int>* pivots) { return rref_impl(m, p, pivots, nullptr); }

int rref_with_transform(Mat& m, int p, std::vector<int>* pivots, Mat& transform) {
    transform = Mat(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i) transform.at(i, i) = 1;
    return rref_impl(m, p, pivots, &transform);
}

int rank(Mat m, int p) { return rref_impl(m, p, nullptr, nullptr); }

Mat mul(const Mat& a, const Mat& b, int p) {
    if (a.cols != b.rows) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
    Mat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            int f = a.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                out.at(i, j) = norm_mod(out.at(i, j) + static_cast<long long>(f) * b.at(k, j), p);
            }
        }
    }
    return out;
}

std::optional<Mat> inverse(const Mat& m, int p) {
    if (m.rows != m.cols) fail(Errc::DimensionMismatch, "inverse of non-square matrix");
    Mat work = m;
    Mat aug(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i) aug.at(i, i) = 1;
    int rk = rref_impl(work, p, nullptr, &aug);
    if (rk != m.rows) return std::nullopt;
    return aug;
}

std::vector<std::vector<int>> nullspace(Mat m, int p) {
    std::vector<int> pivots;
    rref_impl(m, p, &pivots, nullptr);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<int>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<int> v(m.cols, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = norm_mod(-m.at(static_cast<int>(r), free_col), p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<int>> solve(Mat m, std::vector<int> rhs, int p) {
    if (static_cast<int>(rhs.size()) != m.rows) {
        fail(Errc::DimensionMismatch, "rhs length mismatch");
    }
    Mat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = norm_mod(rhs[r], p);
    }
    std::vector<int> pivots;
    int rk = rref(aug, p, &pivots);
    for (int c : pivots) {
        if (c == m.cols) return std::nullopt;  // inconsistent
    }
    std::vector<int> x(m.cols, 0);
    for (int r = 0; r < rk; ++r) x[pivots[r]] = aug.at(r, m.cols);
    return x;
}

}  // namespace semifield::fpla
