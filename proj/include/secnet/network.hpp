#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "secnet/mat.hpp"

namespace secnet {

enum class ModelKind { Passive, Addition, Replacement };

struct EdgeDef {
    std::string tail;
    std::string head;
};

// Directed multigraph with per-edge linear coefficients. Edge ids are 1-based
// and define the transmission order: theta[{j, j'}] != 0 only for j' < j, and
// only for j > source_count (source edges carry the input directly).
struct NetworkSpec {
    ArithCtx ctx;
    int edge_count = 0;   // m7
    int source_count = 0; // m3
    std::map<int, EdgeDef> edges;
    std::map<std::pair<int, int>, std::uint32_t> theta;
    std::vector<int> sink_edges;     // strictly increasing, length m4
    std::vector<int> wiretap_edges;  // strictly increasing, length m6
    std::vector<int> inject_edges;   // injective, length m5
    ModelKind model = ModelKind::Passive;

    int m3() const { return source_count; }
    int m4() const { return (int)sink_edges.size(); }
    int m5() const { return (int)inject_edges.size(); }
    int m6() const { return (int)wiretap_edges.size(); }
    int m7() const { return edge_count; }
};

NetworkSpec parse_network(const std::string& text);
NetworkSpec parse_network_file(const std::string& path);

// Rewrites the graph so no source edge is attacked: each source edge is cut
// in two by a fresh vertex; tails keep ids 1..m3, heads become m3+1..2m3 and
// every other id shifts by m3. Attack/sink references move to the head parts.
NetworkSpec split_source_edges(const NetworkSpec& spec);

struct TransferModel {
    ArithCtx ctx;
    ModelKind kind = ModelKind::Passive;
    Mat K_B;  // m4 x m3
    Mat K_E;  // m6 x m3
    Mat H_B;  // m4 x m5
    Mat H_E;  // m6 x m5
    int m0 = 0, m1 = 0, m2 = 0;
    int m3 = 0, m4 = 0, m5 = 0, m6 = 0;
    std::vector<int> wiretap_edges;  // row labels of K_E / H_E
    std::vector<int> inject_edges;   // column labels of H_B / H_E
};

TransferModel compile_passive(const NetworkSpec& spec);
TransferModel compile_addition(const NetworkSpec& spec);
TransferModel compile_replacement(const NetworkSpec& spec);
TransferModel compile_model(const NetworkSpec& spec);  // dispatch on spec.model

// Observation windows, one per injection, holding 0-based indices into the
// wiretap sequence. order[i] (when present) names the H_E column injection i
// refers to; an empty order means column i.
struct WindowSet {
    std::vector<std::vector<int>> windows;
    std::vector<int> order;
};

struct CausalReport {
    bool ok = true;
    std::string violation;
};

CausalReport check_causal(const TransferModel& model, const WindowSet& ws);

struct OptimalWindows {
    std::vector<int> eta_edges;  // inject edge ids in injection order
    std::vector<int> gamma;      // per eta entry; edge_count+1 stands for +infinity
    WindowSet windows;           // order[i] = spec inject column of eta_edges[i]
};

// Largest nested windows compatible with the transmission order: an edge's
// injection may be keyed on every wiretapped edge transmitted before the
// first wiretapped edge that its noise can reach.
OptimalWindows optimal_windows(const NetworkSpec& spec);

struct NodeAdversary {
    NetworkSpec spec;  // possibly rewritten; wiretap/inject sets filled in
    std::vector<int> edges;  // attacked edge ids in the returned spec
};

// Edge sets for an adversary occupying the given vertices: every edge
// incident to an occupied vertex is wiretapped and controlled.
NodeAdversary nodes_to_edges(const NetworkSpec& spec,
                             const std::vector<std::string>& occupied);

struct MulticastTable {
    int senders = 0;
    std::vector<int> receivers;                             // b_i per sender
    std::map<std::pair<int, int>, int> rank_direct;         // (i, j) -> rank of sender i at its receiver j
    std::map<std::pair<int, int>, int> rank_cross;          // (i, j) -> injected-cross rank
    std::map<std::tuple<int, int, int>, int> rank_leak;     // (i, i'', j'') -> leaked rank
};

struct MulticastParams {
    int m0 = 0, m1 = 0, m2 = 0;
};

std::vector<MulticastParams> multicast_params(const MulticastTable& table);

}  // namespace secnet
