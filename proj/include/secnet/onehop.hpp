#pragma once

#include <optional>
#include <utility>

#include "secnet/attack.hpp"
#include "secnet/dist.hpp"

namespace secnet {

// d x d relay table indexed [incoming-edge-1 value][incoming-edge-2 value].
using RelayTable = std::vector<std::vector<std::uint32_t>>;

struct OneHopCode {
    std::uint64_t d = 2;
    ArithCtx zd;  // ring(d)
    enum class Encoder { Standard, Table } encoder = Encoder::Standard;
    // Standard: Y1 = M + L, Y2 = L. Table: entry m*d + l -> (Y1, Y2).
    std::vector<std::pair<std::uint32_t, std::uint32_t>> encoder_table;
    RelayTable relay3, relay4;

    std::pair<std::uint32_t, std::uint32_t> encode(std::uint32_t m, std::uint32_t l) const;
    std::pair<std::uint32_t, std::uint32_t> relay(std::uint32_t y1, std::uint32_t y2) const;
};

OneHopCode make_standard_code(std::uint64_t d, RelayTable t3, RelayTable t4);

// The binary non-linear code whose relay computes Y3 = Y1(Y2+1), Y4 = (Y1+1)Y2
// over Z2, with encoder Y1 = L, Y2 = M + L and decoder Y3 + Y4.
OneHopCode binary_counterexample();

struct ALSVerdict {
    bool anti_latin_3 = false;
    bool anti_latin_4 = false;
    bool fibers_disjoint = false;  // diagonal-offset fibers pairwise disjoint
    bool decodable = false;        // all of the above
    std::string witness;
};

ALSVerdict verify_pair(const RelayTable& t3, const RelayTable& t4, std::uint64_t d);

std::pair<RelayTable, RelayTable> construct_odd(std::uint64_t d);
std::pair<RelayTable, RelayTable> construct_even(std::uint64_t d);

// Exhaustive search over table pairs with value relabeling quotiented only by
// pinning t3[0][0] = 0. d in {2, 3}; budget caps the number of pair checks.
std::vector<std::pair<RelayTable, RelayTable>> search_pairs(std::uint64_t d,
                                                            std::uint64_t budget,
                                                            int jobs = 1);

// Exact joint distribution of (M, Y1, Y2, Y3, Y4) under uniform (M, L).
JointDist onehop_passive_dist(const OneHopCode& code);

// Decoded message for a decodable standard-encoder pair, from the offset the
// fiber structure pins down. nullopt when (y3, y4) is not a codeword.
std::optional<std::uint32_t> onehop_decode(const OneHopCode& code, std::uint32_t y3,
                                           std::uint32_t y4);

// attack-sim adapters: Eve reads attack_edge (1 or 2) before replacing its
// value, and reads observe_edge (3 or 4) downstream.
Channel onehop_channel(const OneHopCode& code, int attack_edge, int observe_edge);
Code onehop_code_adapter(const OneHopCode& code);
// Replacement strategy: attacked-edge value v is replaced by fn[v].
Strategy replacement_strategy(const ArithCtx& zd, const std::vector<std::uint32_t>& fn);

// Best deterministic guess success probability for the secret given the view.
Rational max_recovery_probability(const JointDist& dist, const std::string& secret,
                                  const std::vector<std::string>& view);

struct LeakageProfile {
    double mi_bits[2][2];   // [i][j]: I(M; Y_{i+1}, Y_{j+3})
    Rational d1[2][2];      // l1 security distances
    enum class Closed { None, Odd, Even } closed = Closed::None;
    double closed_bits[2][2] = {{0, 0}, {0, 0}};
    double max_abs_gap = 0.0;  // |exact - closed| when closed forms apply
};

LeakageProfile leakage_profile(const OneHopCode& code);

double onehop_odd_leak_bits(std::uint64_t d);
double onehop_even_leak_aligned_bits(std::uint64_t d);  // (Y3,Y1) and (Y4,Y2)
double onehop_even_leak_cross_bits(std::uint64_t d);    // (Y3,Y2) and (Y4,Y1)

struct RelayAudit {
    int survivor_count = 0;
    int orbit_size = 0;
    bool all_survivors_in_orbit = false;
    std::vector<std::pair<RelayTable, RelayTable>> survivors;
};

// All 256 deterministic binary relays under the standard encoder, filtered by
// decodability and two-observation secrecy; survivors compared against the
// per-wire relabeling orbit of the counterexample relay.
RelayAudit classify_binary_relays();

struct RandomizedRelayReport {
    double passive_mi_bits[2][2];
    bool decoder_ok = false;
    Rational max_active_recovery;  // over attacked edge, observed edge, constants
};

RandomizedRelayReport randomized_relay_demo();

}  // namespace secnet
