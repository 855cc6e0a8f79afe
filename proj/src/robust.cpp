#include "secnet/robust.hpp"

#include <cmath>

namespace secnet {

Mat random_matrix(const ArithCtx& ctx, int rows, int cols, Rng& rng) {
    Mat m(ctx, rows, cols);
    for (auto& e : m.a) e = (std::uint32_t)rng.below(ctx.size());
    return m;
}

Mat random_full_rank_matrix(const ArithCtx& ctx, int rows, int cols, int rank, Rng& rng) {
    if (rank > std::min(rows, cols)) throw DimensionError("rank above min(rows, cols)");
    for (;;) {
        // product of random rows x rank and rank x cols full-rank factors
        Mat a = random_matrix(ctx, rows, rank, rng);
        Mat b = random_matrix(ctx, rank, cols, rng);
        if (mat_rank(a) != rank || mat_rank(b) != rank) continue;
        return mat_mul(a, b);
    }
}

namespace {

Mat vandermonde_header(const ArithCtx& ctx, const std::vector<std::uint32_t>& points, int n) {
    Mat u1(ctx, n, (int)points.size());
    for (int j = 0; j < (int)points.size(); ++j) {
        std::uint32_t acc = 1;
        for (int i = 0; i < n; ++i) {
            acc = ctx.mul(acc, points[(std::size_t)j]);  // V^(i+1)
            u1.at(i, j) = acc;
        }
    }
    return u1;
}

}  // namespace

RobustCode make_robust_code_with_points(const ArithCtx& ctx, int m0, int m1, int m3, int m4,
                                        int n, std::vector<std::uint32_t> points, Rng& rng) {
    if (!ctx.is_field()) throw Error("robust code needs a field");
    if (m1 >= m0) throw Error("message rank must exceed the injection rank");
    if (m0 > m3 || m0 > m4) throw Error("transmission rank cannot exceed the dimensions");
    if ((int)points.size() != m0 + 1) throw DimensionError("need m0+1 evaluation points");
    RobustCode code;
    code.ctx = ctx;
    code.m0 = m0;
    code.m1 = m1;
    code.m3 = m3;
    code.m4 = m4;
    code.n = n;
    code.points = std::move(points);
    do {
        code.u0 = random_matrix(ctx, m3, m3, rng);
    } while (!mat_invertible(code.u0));
    code.u1 = vandermonde_header(ctx, code.points, n);
    return code;
}

RobustCode make_robust_code(const ArithCtx& ctx, int m0, int m1, int m3, int m4, int n,
                            Rng& rng) {
    std::vector<std::uint32_t> pts((std::size_t)(m0 + 1));
    for (auto& v : pts) v = (std::uint32_t)rng.below(ctx.size());
    return make_robust_code_with_points(ctx, m0, m1, m3, m4, n, std::move(pts), rng);
}

RobustEncoding robust_encode(const RobustCode& code, const Mat& message) {
    if (message.rows != code.message_rows() || message.cols != code.n)
        throw DimensionError("message must be (m0-m1) x n");
    Mat x(code.ctx, code.m3, code.n);
    for (int r = 0; r < message.rows; ++r)
        for (int c = 0; c < message.cols; ++c) x.at(r, c) = message.at(r, c);
    RobustEncoding enc;
    enc.channel_input = mat_mul(code.u0, x);
    enc.header = mat_mul(message, code.u1);
    return enc;
}

DecodeTrace robust_decode(const RobustCode& code, const Mat& y_b, const Mat& header) {
    if (y_b.cols != code.n) throw DimensionError("received block must have n columns");
    DecodeTrace trace;
    // greedy lowest-index independent rows
    Mat sel(code.ctx, 0, y_b.cols);
    for (int r = 0; r < y_b.rows; ++r) {
        Mat row(code.ctx, 1, y_b.cols);
        for (int c = 0; c < y_b.cols; ++c) row.at(0, c) = y_b.at(r, c);
        Mat trial = sel.rows == 0 ? row : mat_vconcat(sel, row);
        if (mat_rank(trial) > sel.rows) {
            sel = std::move(trial);
            trace.selected_rows.push_back(r);
        }
    }
    trace.rank_received = sel.rows;
    Mat a = mat_mul(sel, code.u1);  // m̄0 x m
    auto u3 = mat_solve_right(a, header);
    if (!u3) {
        trace.solved = false;
        return trace;
    }
    trace.solved = true;
    trace.u3 = *u3;
    trace.decoded = sel.rows == 0 ? Mat(code.ctx, code.message_rows(), code.n)
                                  : mat_mul(trace.u3, sel);
    return trace;
}

ConditionFlags check_conditions(const RobustCode& code, const Mat& k_b, const Mat& h_hat,
                                const Mat& message, const Mat& z_hat) {
    ConditionFlags flags;
    // A = K_B U0 P with P the leading-columns embedding
    Mat p(code.ctx, code.m3, code.message_rows());
    for (int i = 0; i < code.message_rows(); ++i) p.at(i, i) = 1;
    Mat a = mat_mul(mat_mul(k_b, code.u0), p);
    int ra = mat_rank(a);
    int rh = h_hat.empty() ? 0 : mat_rank(h_hat);
    flags.f1_prime = h_hat.empty() || (mat_rank(mat_hconcat(a, h_hat)) == ra + rh);
    flags.f1_dprime = mat_rank(mat_mul(a, message)) == mat_rank(message);
    Mat stacked = mat_vconcat(message, z_hat);
    flags.f2 = mat_rank(mat_mul(stacked, code.u1)) == mat_rank(stacked);
    return flags;
}

CollisionAudit header_collision_audit(const ArithCtx& ctx, int n, int m, std::uint64_t trials,
                   std::uint64_t seed) {
    CollisionAudit audit;
    audit.trials = trials;
    audit.bound = std::pow((double)n / (double)ctx.size(), (double)m);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, t);
        std::vector<std::uint32_t> delta((std::size_t)n);
        bool nonzero = false;
        do {
            // difference of a random pair x != x'
            for (auto& dv : delta) {
                std::uint32_t xa = (std::uint32_t)rng.below(ctx.size());
                std::uint32_t xb = (std::uint32_t)rng.below(ctx.size());
                dv = ctx.sub(xa, xb);
                if (dv != 0) nonzero = true;
            }
        } while (!nonzero);
        bool collide = true;
        for (int j = 0; j < m && collide; ++j) {
            std::uint32_t v = (std::uint32_t)rng.below(ctx.size());
            // evaluate sum_i delta_i V^(i+1) by Horner on delta_n..delta_1
            std::uint32_t acc = 0;
            for (int i = n - 1; i >= 0; --i)
                acc = ctx.mul(v, ctx.add(acc, delta[(std::size_t)i]));
            if (acc != 0) collide = false;
        }
        if (collide) ++audit.collisions;
    }
    return audit;
}

}  // namespace secnet
