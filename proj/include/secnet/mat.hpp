#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secnet/field.hpp"
#include "secnet/util.hpp"

namespace secnet {

// Dense row-major matrix over an ArithCtx. Value semantics; every entry is a
// canonical element code of the context.
struct Mat {
    ArithCtx ctx;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> a;

    Mat() = default;
    Mat(ArithCtx c, int r, int cl)
        : ctx(std::move(c)), rows(r), cols(cl), a((std::size_t)r * cl, 0) {}

    std::uint32_t& at(int r, int c) { return a[(std::size_t)r * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[(std::size_t)r * cols + c]; }

    static Mat identity(const ArithCtx& ctx, int n);
    static Mat from_rows(const ArithCtx& ctx,
                         const std::vector<std::vector<std::uint32_t>>& rows);

    bool empty() const { return rows == 0 || cols == 0; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a && x.ctx.same_as(y.ctx);
    }
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& m);
Mat mat_hconcat(const Mat& a, const Mat& b);
Mat mat_vconcat(const Mat& a, const Mat& b);
// y = M x for a column vector x (length M.cols).
std::vector<std::uint32_t> mat_apply(const Mat& m, const std::vector<std::uint32_t>& x);

// Row rank by Gaussian elimination, pivoting on the first nonzero column with
// the lowest row index. Field contexts only.
int mat_rank(const Mat& m);

// One solution X of X*A = B with free variables set to zero, or nullopt when
// the system is inconsistent. Requires A.cols == B.cols.
std::optional<Mat> mat_solve_right(const Mat& a, const Mat& b);

// Rows form a basis of {x : M x = 0}; 0 x cols when the kernel is trivial.
Mat mat_kernel(const Mat& m);

// Rows form a basis of (column space of A) ∩ (column space of B).
Mat image_intersect(const Mat& a, const Mat& b);

bool mat_invertible(const Mat& m);
Mat mat_inverse(const Mat& m);

}  // namespace secnet
