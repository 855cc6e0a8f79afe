#pragma once

#include "secnet/mat.hpp"
#include "secnet/util.hpp"

namespace secnet {

// Random outer code with a Vandermonde side channel: invertible mixing U0,
// evaluation points V_1..V_m (m = m0+1), header U1[i][j] = V_j^(i+1), message
// padded with m3 - (m0-m1) zero rows. The receiver decodes from Y_B and the
// secret package (V's, U2 = M U1) alone.
struct RobustCode {
    ArithCtx ctx;
    int m0 = 0, m1 = 0, m3 = 0, m4 = 0, n = 0;
    std::vector<std::uint32_t> points;  // V_1..V_m
    Mat u0;                             // m3 x m3 invertible
    Mat u1;                             // n x m

    int m() const { return m0 + 1; }
    int message_rows() const { return m0 - m1; }
};

RobustCode make_robust_code(const ArithCtx& ctx, int m0, int m1, int m3, int m4, int n,
                            Rng& rng);
// Same dims, caller-picked points (distinct-point mode for structural tests).
RobustCode make_robust_code_with_points(const ArithCtx& ctx, int m0, int m1, int m3, int m4,
                                        int n, std::vector<std::uint32_t> points, Rng& rng);

struct RobustEncoding {
    Mat channel_input;  // m3 x n
    Mat header;         // U2 = M U1, secret side information
};

RobustEncoding robust_encode(const RobustCode& code, const Mat& message);

struct DecodeTrace {
    int rank_received = 0;           // rank of Y_B
    std::vector<int> selected_rows;  // greedy lowest-index independent rows
    Mat u3;
    Mat decoded;
    bool solved = false;  // the linear system had a solution
};

// Decoding sees only Y_B and the secret package; the channel matrices are
// deliberately not parameters.
DecodeTrace robust_decode(const RobustCode& code, const Mat& y_b, const Mat& header);

struct ConditionFlags {
    bool f1_prime = false;   // im(K_B U0 P) meets im H only at 0
    bool f1_dprime = false;  // K_B U0 P injective on the message column space
    bool f2 = false;         // right-multiplying by U1 preserves rank
    bool all() const { return f1_prime && f1_dprime && f2; }
};

// Test-harness predicate with full model knowledge.
ConditionFlags check_conditions(const RobustCode& code, const Mat& k_b, const Mat& h_hat,
                                const Mat& message, const Mat& z_hat);

struct CollisionAudit {
    std::uint64_t trials = 0;
    std::uint64_t collisions = 0;
    double bound = 0.0;  // (n/q')^m
};

// Collision probability of the Vandermonde header against random evaluation
// points, one random vector pair per trial.
CollisionAudit header_collision_audit(const ArithCtx& ctx, int n, int m, std::uint64_t trials,
                   std::uint64_t seed);

Mat random_matrix(const ArithCtx& ctx, int rows, int cols, Rng& rng);
Mat random_full_rank_matrix(const ArithCtx& ctx, int rows, int cols, int rank, Rng& rng);

}  // namespace secnet
