#pragma once

#include <optional>

#include "secnet/attack.hpp"
#include "secnet/mat.hpp"
#include "secnet/rational.hpp"

namespace secnet {

// Modified Toeplitz hash [I | T(S)]: identity on the first kbar coordinates,
// Toeplitz block T(S) of shape kbar x (k - kbar) on the rest, built from a
// seed of k-1 elements as T[a][b] = S[a - b + (k - kbar)] (1-based indexing).
struct ToeplitzHash {
    ArithCtx ctx;
    int input_len = 0;   // k
    int output_len = 0;  // kbar
    std::vector<std::uint32_t> seed;  // k-1 elements

    Mat toeplitz() const;  // kbar x (k - kbar)
    Mat matrix() const;    // [I | T]
    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& x) const;
};

ToeplitzHash make_toeplitz(const ArithCtx& ctx, std::vector<std::uint32_t> seed, int k,
                           int kbar);
ToeplitzHash random_toeplitz(const ArithCtx& ctx, int k, int kbar, Rng& rng);

struct Universal2Audit {
    Rational max_collision;  // max over x != x' of Pr_S[h(x) = h(x')]
    Rational bound;          // q^{-kbar}
    bool ok = false;
};

// Exhaustive over all seeds and all input differences; restricted to
// q^k <= 2^16.
Universal2Audit universal2_audit(const ArithCtx& ctx, int k, int kbar);

// Invertible extension: (m, l) -> (m - T(S) l, l). Hashing the result gives m
// back for every seed.
std::vector<std::uint32_t> wrap_input(const ToeplitzHash& h,
                                      const std::vector<std::uint32_t>& message,
                                      const std::vector<std::uint32_t>& scramble);
// hash o inner-decode
std::vector<std::uint32_t> wrap_output(const ToeplitzHash& h,
                                       const std::vector<std::uint32_t>& inner_decoded);

// Wrapped block code over an identity inner code: k = m3*n input symbols are
// laid out column-major on the channel block. decode assumes Y_B reproduces
// the block (identity K_B), as on parallel-edge networks.
Code wrapped_identity_code(const ToeplitzHash& h, int m3, int n);

// Leak dimensions of the wrapped code against one eavesdropper matrix:
// rank[A|B] - rank[B] where A, B are Eve's responses to message and scramble
// units. Exact mutual information in units of log q.
int wrapped_leak_dims(const ToeplitzHash& h, int m3, int n, const Mat& k_e);

struct SeedSearchResult {
    bool zero_leak_found = false;
    std::vector<std::uint32_t> seed;  // first zero-leak seed in lexicographic order
    int min_leak_dims = 0;
    std::vector<std::uint32_t> best_seed;
    int witness_family_index = -1;  // adversary matrix achieving min_leak_dims
    std::uint64_t seeds_scanned = 0;
    std::uint64_t zero_leak_seeds = 0;  // filled when scan_all
};

// Lexicographic scan over seeds; stops at the first seed with zero leak
// against every matrix in the family unless scan_all is set.
SeedSearchResult seed_search(const ArithCtx& ctx, int k, int kbar, int m3, int n,
                             const std::vector<Mat>& family, bool scan_all = false);

// All rows x cols matrices over ctx with the given rank (small dims only).
std::vector<Mat> enumerate_rank_matrices(const ArithCtx& ctx, int rows, int cols, int rank);

enum class RateRegime { SecrecyRobustness, SecrecyOnly, RobustnessOnly };

struct RateReport {
    int rate = 0;
    bool guaranteed = false;
};

RateReport rate_report(int m0, int m1, int m2, RateRegime regime);

}  // namespace secnet
