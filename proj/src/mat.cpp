#include "secnet/mat.hpp"

#include <utility>

namespace secnet {

Mat Mat::identity(const ArithCtx& ctx, int n) {
    Mat m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const ArithCtx& ctx,
                   const std::vector<std::vector<std::uint32_t>>& rows) {
    int r = (int)rows.size();
    int c = r == 0 ? 0 : (int)rows[0].size();
    Mat m(ctx, r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows[i].size() != c) throw DimensionError("ragged row list");
        for (int j = 0; j < c; ++j) {
            if (!ctx.valid_element(rows[i][j])) throw Error("entry out of range");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

static void check_same_ctx(const Mat& a, const Mat& b) {
    if (!a.ctx.same_as(b.ctx)) throw DimensionError("mixed arithmetic contexts");
}

Mat mat_mul(const Mat& a, const Mat& b) {
    check_same_ctx(a, b);
    if (a.cols != b.rows) throw DimensionError("matrix product shape mismatch");
    Mat r(a.ctx, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            std::uint32_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) {
                std::uint32_t prod = a.ctx.mul(aik, b.at(k, j));
                r.at(i, j) = a.ctx.add(r.at(i, j), prod);
            }
        }
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    check_same_ctx(a, b);
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("matrix sum shape mismatch");
    Mat r = a;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = a.ctx.add(a.a[i], b.a[i]);
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    check_same_ctx(a, b);
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionError("matrix sum shape mismatch");
    Mat r = a;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = a.ctx.sub(a.a[i], b.a[i]);
    return r;
}

Mat mat_transpose(const Mat& m) {
    Mat r(m.ctx, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Mat mat_hconcat(const Mat& a, const Mat& b) {
    check_same_ctx(a, b);
    if (a.rows != b.rows) throw DimensionError("hconcat row mismatch");
    Mat r(a.ctx, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
    }
    return r;
}

Mat mat_vconcat(const Mat& a, const Mat& b) {
    check_same_ctx(a, b);
    if (a.cols != b.cols) throw DimensionError("vconcat column mismatch");
    Mat r(a.ctx, a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
    return r;
}

std::vector<std::uint32_t> mat_apply(const Mat& m, const std::vector<std::uint32_t>& x) {
    if ((int)x.size() != m.cols) throw DimensionError("vector length mismatch");
    std::vector<std::uint32_t> y(m.rows, 0);
    for (int i = 0; i < m.rows; ++i) {
        std::uint32_t acc = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0) acc = m.ctx.add(acc, m.ctx.mul(m.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

namespace {

void require_field(const Mat& m, const char* op) {
    if (!m.ctx.is_field())
        throw UnsupportedOperation(std::string(op) + " requires a field context");
}

// In-place row echelon form; returns pivot (row, col) pairs in elimination
// order. Deterministic: first nonzero column, lowest row index.
std::vector<std::pair<int, int>> echelon(Mat& m) {
    const ArithCtx& f = m.ctx;
    std::vector<std::pair<int, int>> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        std::uint32_t piv_inv = f.inv(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), piv_inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            std::uint32_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(row, j)));
        }
        pivots.emplace_back(row, col);
        ++row;
    }
    return pivots;
}

}  // namespace

int mat_rank(const Mat& m) {
    require_field(m, "rank");
    if (m.empty()) return 0;
    Mat w = m;
    return (int)echelon(w).size();
}

std::optional<Mat> mat_solve_right(const Mat& a, const Mat& b) {
    require_field(a, "solve");
    check_same_ctx(a, b);
    if (a.cols != b.cols) throw DimensionError("X*A = B needs matching column counts");
    // Transpose to A^T X^T = B^T and eliminate on [A^T | B^T].
    Mat at = mat_transpose(a);
    Mat bt = mat_transpose(b);
    Mat aug = mat_hconcat(at, bt);
    auto pivots = echelon(aug);
    // Consistency: no pivot may fall in the augmented block.
    std::vector<int> pivot_col_of_row(aug.rows, -1);
    for (auto [r, c] : pivots) {
        if (c >= at.cols) return std::nullopt;
        pivot_col_of_row[r] = c;
    }
    for (int r = 0; r < aug.rows; ++r) {
        if (pivot_col_of_row[r] >= 0) continue;
        for (int j = at.cols; j < aug.cols; ++j)
            if (aug.at(r, j) != 0) return std::nullopt;
    }
    Mat xt(a.ctx, at.cols, bt.cols);  // free variables stay zero
    for (auto [r, c] : pivots)
        for (int j = 0; j < bt.cols; ++j) xt.at(c, j) = aug.at(r, at.cols + j);
    return mat_transpose(xt);
}

Mat mat_kernel(const Mat& m) {
    require_field(m, "kernel");
    Mat w = m;
    auto pivots = echelon(w);
    std::vector<int> pivot_cols;
    std::vector<bool> is_pivot(m.cols, false);
    for (auto [r, c] : pivots) {
        pivot_cols.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint32_t> v(m.cols, 0);
        v[c] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            auto [r, pc] = pivots[k];
            v[pc] = m.ctx.neg(w.at(r, c));
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Mat(m.ctx, 0, m.cols);
    return Mat::from_rows(m.ctx, basis);
}

Mat image_intersect(const Mat& a, const Mat& b) {
    require_field(a, "image intersection");
    check_same_ctx(a, b);
    if (a.rows != b.rows) throw DimensionError("images live in different spaces");
    // ker [A | B] gives pairs (u, v) with A u = -B v; the vectors A u span the
    // intersection. Reduce those to a basis.
    Mat ab = mat_hconcat(a, b);
    Mat ker = mat_kernel(ab);
    if (ker.rows == 0) return Mat(a.ctx, 0, a.rows);
    Mat u(a.ctx, ker.rows, a.cols);
    for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < a.cols; ++j) u.at(i, j) = ker.at(i, j);
    Mat vecs = mat_mul(u, mat_transpose(a));  // rows are A·u
    Mat w = vecs;
    auto pivots = echelon(w);
    Mat basis(a.ctx, (int)pivots.size(), a.rows);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int j = 0; j < a.rows; ++j) basis.at((int)k, j) = w.at((int)k, j);
    return basis;
}

bool mat_invertible(const Mat& m) {
    if (m.rows != m.cols) return false;
    return mat_rank(m) == m.rows;
}

Mat mat_inverse(const Mat& m) {
    require_field(m, "inverse");
    if (m.rows != m.cols) throw DimensionError("inverse of non-square matrix");
    Mat aug = mat_hconcat(m, Mat::identity(m.ctx, m.rows));
    auto pivots = echelon(aug);
    if ((int)pivots.size() != m.rows) throw Error("matrix is singular");
    Mat inv(m.ctx, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

}  // namespace secnet
