#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "secnet/dist.hpp"
#include "secnet/network.hpp"

namespace secnet {

// A channel evaluates one block of n transmissions: encoder output X (m3 x n)
// plus Eve's injections Z (m5 x n) to Bob's and Eve's observations. A null Z
// means no attack at all (for replacement-style channels this differs from
// injecting zeros).
struct Channel {
    ArithCtx ctx;
    int m3 = 0, m4 = 0, m5 = 0, m6 = 0;
    int n = 1;
    std::optional<TransferModel> linear;  // set for matrix channels
    std::function<std::pair<Mat, Mat>(const Mat& x, const Mat* z)> eval;
};

Channel linear_channel(const TransferModel& model, int n = 1);

// Replacement-model channels answer the no-attack case with the passive
// matrices: leaving Z out is not the same as overwriting edges with zeros.
Channel linear_channel_with_baseline(const TransferModel& model,
                                     const TransferModel& no_attack, int n = 1);

// Block code: encoder table on message x scramble, decoder on Bob's block.
struct Code {
    ArithCtx ctx;
    int m3 = 0;
    int n = 1;
    std::uint64_t message_count = 1;
    std::uint64_t scramble_count = 1;
    std::function<Mat(std::uint64_t m, std::uint64_t l)> encode;
    std::function<std::uint64_t(const Mat& y_b)> decode;  // may be empty
};

// X = reshape of (packed message digits, packed scramble digits) in base q,
// column-major: column t holds symbols m3*t .. m3*t+m3-1.
Code identity_code(const ArithCtx& ctx, int m3, int n, std::uint64_t message_count);

// |L| = q^{m3 n} / |M| rounded down to a power of q (at least 1).
std::uint64_t default_scramble_count(std::uint64_t q, int m3, int n, std::uint64_t message_count);

enum class StrategyKind { Zero, Linear, Table };

struct Strategy {
    StrategyKind kind = StrategyKind::Zero;
    Mat linear_map;  // m5 x m6, z = G y per transmission column
    WindowSet windows;
    // tables[i]: packed window observation (values of Y_E components in
    // windows[i], listed order) -> injected element, applied per column.
    std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> tables;

    static Strategy zero();
    static Strategy linear(Mat g);
    static Strategy table(WindowSet ws,
                          std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> t);
};

Strategy parse_strategy(const std::string& text, const ArithCtx& ctx, int m5, int m6);

// Exact joint distribution of (M, YB, YE) under no attack, uniform (M, L).
JointDist run_passive(const Code& code, const Channel& ch,
                      std::uint64_t enumeration_budget = (1u << 24));

// Exact joint distribution of (M, YB, YE, Z); the fixed point y = Y_E(x, a(y))
// is solved by causal substitution when the strategy windows are causal for a
// matrix channel, otherwise by exhaustive candidate search with a uniqueness
// demand on every input.
JointDist run_active(const Code& code, const Channel& ch, const Strategy& strategy,
                     std::uint64_t enumeration_budget = (1u << 24),
                     std::uint64_t search_budget = (1u << 20));

enum class ReductionVerdict { Equivalent, Leakier, Inconclusive };

struct ReductionResult {
    ReductionVerdict verdict = ReductionVerdict::Equivalent;
    bool active_from_passive = false;  // direction (a)
    bool passive_from_active = false;  // direction (b)
    double info_passive_bits = 0.0;
    double info_active_bits = 0.0;
    std::string witness;
};

// Mutual deterministic sufficiency of Eve's active view against her passive
// view on the support; equivalence implies exactly equal leakage.
ReductionResult reduction_check(const Code& code, const Channel& ch, const Strategy& strategy,
                                std::uint64_t enumeration_budget = (1u << 24),
                                std::uint64_t search_budget = (1u << 20));

}  // namespace secnet
