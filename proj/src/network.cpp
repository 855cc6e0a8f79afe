#include "secnet/network.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace secnet {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream in(stripped);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::uint64_t parse_u64(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected a non-negative integer, got '" + s + "'");
    }
}

void check_edge_id(const NetworkSpec& spec, std::uint64_t id, int line) {
    if (id < 1 || (int)id > spec.edge_count)
        throw ParseError(line, "edge index " + std::to_string(id) + " out of range 1.." +
                                   std::to_string(spec.edge_count));
}

std::vector<int> parse_edge_list(const NetworkSpec& spec,
                                 const std::vector<std::string>& toks, int line,
                                 bool strictly_increasing) {
    std::vector<int> ids;
    std::set<int> seen;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        std::uint64_t id = parse_u64(toks[i], line);
        check_edge_id(spec, id, line);
        if (!seen.insert((int)id).second)
            throw ParseError(line, "duplicate edge index " + std::to_string(id));
        if (strictly_increasing && !ids.empty() && (int)id <= ids.back())
            throw ParseError(line, "edge indices must be strictly increasing");
        ids.push_back((int)id);
    }
    return ids;
}

}  // namespace

NetworkSpec parse_network(const std::string& text) {
    NetworkSpec spec;
    bool have_ctx = false, have_edges = false, have_source = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "ctx") {
            if (toks.size() < 3) throw ParseError(lineno, "ctx needs a kind and a modulus");
            if (toks[1] == "field") {
                std::uint64_t p = parse_u64(toks[2], lineno);
                std::uint32_t t = 1;
                if (toks.size() == 5 && toks[3] == "ext")
                    t = (std::uint32_t)parse_u64(toks[4], lineno);
                else if (toks.size() != 3)
                    throw ParseError(lineno, "ctx field <p> [ext <t>]");
                try {
                    spec.ctx = t == 1 ? ArithCtx::prime_field(p) : ArithCtx::extension_field(p, t);
                } catch (const Error& e) {
                    throw ParseError(lineno, e.what());
                }
            } else if (toks[1] == "ring") {
                if (toks.size() != 3) throw ParseError(lineno, "ctx ring <d>");
                try {
                    spec.ctx = ArithCtx::ring(parse_u64(toks[2], lineno));
                } catch (const Error& e) {
                    throw ParseError(lineno, e.what());
                }
            } else {
                throw ParseError(lineno, "ctx kind must be 'field' or 'ring'");
            }
            have_ctx = true;
        } else if (kw == "edges") {
            if (toks.size() != 2) throw ParseError(lineno, "edges <m7>");
            spec.edge_count = (int)parse_u64(toks[1], lineno);
            if (spec.edge_count < 1) throw ParseError(lineno, "edge count must be positive");
            have_edges = true;
        } else if (kw == "edge") {
            if (!have_edges) throw ParseError(lineno, "edge before edges declaration");
            if (toks.size() != 4) throw ParseError(lineno, "edge <j> <tail> <head>");
            std::uint64_t id = parse_u64(toks[1], lineno);
            check_edge_id(spec, id, lineno);
            spec.edges[(int)id] = EdgeDef{toks[2], toks[3]};
        } else if (kw == "source") {
            if (toks.size() != 2) throw ParseError(lineno, "source <m3>");
            spec.source_count = (int)parse_u64(toks[1], lineno);
            have_source = true;
        } else if (kw == "coeff") {
            if (!have_ctx || !have_edges || !have_source)
                throw ParseError(lineno, "coeff before ctx/edges/source declarations");
            if (toks.size() != 4) throw ParseError(lineno, "coeff <j> <j'> <element>");
            std::uint64_t j = parse_u64(toks[1], lineno);
            std::uint64_t jp = parse_u64(toks[2], lineno);
            std::uint64_t v = parse_u64(toks[3], lineno);
            check_edge_id(spec, j, lineno);
            check_edge_id(spec, jp, lineno);
            if (jp >= j)
                throw ParseError(lineno, "partial time order violated: coefficient (" +
                                             std::to_string(j) + "," + std::to_string(jp) +
                                             ") needs j' < j");
            if ((int)j <= spec.source_count)
                throw ParseError(lineno, "source edges carry the input directly");
            if (!spec.ctx.valid_element(v))
                throw ParseError(lineno, "element " + std::to_string(v) + " out of range");
            if (v != 0) spec.theta[{(int)j, (int)jp}] = (std::uint32_t)v;
        } else if (kw == "sink") {
            spec.sink_edges = parse_edge_list(spec, toks, lineno, true);
        } else if (kw == "wiretap") {
            spec.wiretap_edges = parse_edge_list(spec, toks, lineno, true);
        } else if (kw == "inject") {
            spec.inject_edges = parse_edge_list(spec, toks, lineno, false);
        } else if (kw == "model") {
            if (toks.size() != 2) throw ParseError(lineno, "model passive|addition|replacement");
            if (toks[1] == "passive") spec.model = ModelKind::Passive;
            else if (toks[1] == "addition") spec.model = ModelKind::Addition;
            else if (toks[1] == "replacement") spec.model = ModelKind::Replacement;
            else throw ParseError(lineno, "unknown model '" + toks[1] + "'");
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (!have_ctx) throw ParseError(lineno, "missing ctx declaration");
    if (!have_edges || spec.edge_count == 0) throw ParseError(lineno, "empty edge list");
    if (!have_source) throw ParseError(lineno, "missing source declaration");
    if (spec.source_count < 1 || spec.source_count > spec.edge_count)
        throw ParseError(lineno, "source count out of range");

    bool inject_hits_source =
        std::any_of(spec.inject_edges.begin(), spec.inject_edges.end(),
                    [&](int j) { return j <= spec.source_count; });
    if (inject_hits_source) spec = split_source_edges(spec);

    if (spec.model == ModelKind::Replacement) {
        std::vector<int> inj = spec.inject_edges;
        std::sort(inj.begin(), inj.end());
        if (inj != spec.wiretap_edges)
            throw ParseError(lineno, "replacement model requires identical wiretap and inject sets");
    }
    return spec;
}

NetworkSpec parse_network_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open network file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_network(buf.str());
}

NetworkSpec split_source_edges(const NetworkSpec& spec) {
    const int m3 = spec.source_count;
    NetworkSpec out;
    out.ctx = spec.ctx;
    out.edge_count = spec.edge_count + m3;
    out.source_count = m3;
    out.model = spec.model;
    for (int j = 1; j <= m3; ++j) {
        auto it = spec.edges.find(j);
        std::string tail = it != spec.edges.end() ? it->second.tail : "?";
        std::string head = it != spec.edges.end() ? it->second.head : "?";
        std::string mid = "_cut" + std::to_string(j);
        out.edges[j] = EdgeDef{tail, mid};
        out.edges[j + m3] = EdgeDef{mid, head};
        out.theta[{j + m3, j}] = 1;
    }
    for (const auto& [id, e] : spec.edges)
        if (id > m3) out.edges[id + m3] = e;
    for (const auto& [key, v] : spec.theta)
        out.theta[{key.first + m3, key.second + m3}] = v;
    auto shift = [m3](const std::vector<int>& ids) {
        std::vector<int> r;
        r.reserve(ids.size());
        for (int j : ids) r.push_back(j + m3);
        return r;
    };
    out.sink_edges = shift(spec.sink_edges);
    out.wiretap_edges = shift(spec.wiretap_edges);
    out.inject_edges = shift(spec.inject_edges);
    return out;
}

namespace {

// Edge-value transfer matrix: column b is the response of all m7 edge values
// to a unit preloaded on slot b. with_passthrough keeps the preloaded value on
// its own slot (addition model); attacked edges, when given, ignore their
// inflow entirely (replacement model).
Mat edge_transfer(const NetworkSpec& spec, bool with_passthrough,
                  const std::set<int>* replaced) {
    const ArithCtx& f = spec.ctx;
    const int m7 = spec.edge_count;
    Mat t = Mat::identity(f, m7);
    for (int j = spec.source_count + 1; j <= m7; ++j) {
        bool keep_own = with_passthrough || (replaced && replaced->count(j));
        std::vector<std::uint32_t> row(m7, 0);
        if (keep_own) row[j - 1] = 1;
        if (!(replaced && replaced->count(j))) {
            for (int jp = 1; jp < j; ++jp) {
                auto it = spec.theta.find({j, jp});
                if (it == spec.theta.end()) continue;
                for (int c = 0; c < m7; ++c) {
                    if (t.at(jp - 1, c) == 0) continue;
                    row[c] = f.add(row[c], f.mul(it->second, t.at(jp - 1, c)));
                }
            }
        }
        for (int c = 0; c < m7; ++c) t.at(j - 1, c) = row[c];
    }
    return t;
}

Mat select_rows(const Mat& t, const std::vector<int>& edge_ids) {
    Mat r(t.ctx, (int)edge_ids.size(), t.cols);
    for (std::size_t i = 0; i < edge_ids.size(); ++i)
        for (int c = 0; c < t.cols; ++c) r.at((int)i, c) = t.at(edge_ids[i] - 1, c);
    return r;
}

Mat select_cols(const Mat& t, const std::vector<int>& edge_ids) {
    Mat r(t.ctx, t.rows, (int)edge_ids.size());
    for (int i = 0; i < t.rows; ++i)
        for (std::size_t c = 0; c < edge_ids.size(); ++c)
            r.at(i, (int)c) = t.at(i, edge_ids[c] - 1);
    return r;
}

std::vector<int> source_ids(const NetworkSpec& spec) {
    std::vector<int> ids(spec.source_count);
    for (int i = 0; i < spec.source_count; ++i) ids[i] = i + 1;
    return ids;
}

void fill_ranks(TransferModel& m) {
    m.m0 = m.K_B.empty() ? 0 : mat_rank(m.K_B);
    m.m1 = m.H_B.empty() ? 0 : mat_rank(m.H_B);
    m.m2 = m.K_E.empty() ? 0 : mat_rank(m.K_E);
}

}  // namespace

TransferModel compile_passive(const NetworkSpec& spec) {
    Mat t = edge_transfer(spec, false, nullptr);
    TransferModel m;
    m.ctx = spec.ctx;
    m.kind = ModelKind::Passive;
    m.m3 = spec.m3();
    m.m4 = spec.m4();
    m.m5 = 0;
    m.m6 = spec.m6();
    m.wiretap_edges = spec.wiretap_edges;
    m.K_B = select_cols(select_rows(t, spec.sink_edges), source_ids(spec));
    m.K_E = select_cols(select_rows(t, spec.wiretap_edges), source_ids(spec));
    m.H_B = Mat(spec.ctx, m.m4, 0);
    m.H_E = Mat(spec.ctx, m.m6, 0);
    fill_ranks(m);
    return m;
}

TransferModel compile_addition(const NetworkSpec& spec) {
    if (spec.inject_edges.empty()) throw Error("addition model needs a nonempty inject set");
    for (int j : spec.inject_edges)
        if (j <= spec.source_count)
            throw Error("inject set touches a source edge; split the graph first");
    Mat t = edge_transfer(spec, false, nullptr);
    Mat ta = edge_transfer(spec, true, nullptr);
    Mat ta_minus_i = mat_sub(ta, Mat::identity(spec.ctx, spec.edge_count));
    TransferModel m;
    m.ctx = spec.ctx;
    m.kind = ModelKind::Addition;
    m.m3 = spec.m3();
    m.m4 = spec.m4();
    m.m5 = spec.m5();
    m.m6 = spec.m6();
    m.wiretap_edges = spec.wiretap_edges;
    m.inject_edges = spec.inject_edges;
    m.K_B = select_cols(select_rows(t, spec.sink_edges), source_ids(spec));
    m.K_E = select_cols(select_rows(t, spec.wiretap_edges), source_ids(spec));
    m.H_B = select_cols(select_rows(ta, spec.sink_edges), spec.inject_edges);
    m.H_E = select_cols(select_rows(ta_minus_i, spec.wiretap_edges), spec.inject_edges);
    fill_ranks(m);
    return m;
}

TransferModel compile_replacement(const NetworkSpec& spec) {
    std::vector<int> inj = spec.inject_edges;
    std::sort(inj.begin(), inj.end());
    if (inj != spec.wiretap_edges)
        throw Error("replacement model requires identical wiretap and inject sets");
    for (int j : spec.wiretap_edges)
        if (j <= spec.source_count)
            throw Error("attacked source edges must be split first");
    const ArithCtx& f = spec.ctx;
    std::set<int> replaced(spec.wiretap_edges.begin(), spec.wiretap_edges.end());
    Mat t = edge_transfer(spec, false, &replaced);
    // Eve reads the inflow of each attacked edge, not her own replacement:
    // re-derive those rows from the coefficients.
    Mat ft = t;
    for (int e : spec.wiretap_edges) {
        std::vector<std::uint32_t> row(spec.edge_count, 0);
        for (int jp = 1; jp < e; ++jp) {
            auto it = spec.theta.find({e, jp});
            if (it == spec.theta.end()) continue;
            for (int c = 0; c < spec.edge_count; ++c) {
                if (t.at(jp - 1, c) == 0) continue;
                row[c] = f.add(row[c], f.mul(it->second, t.at(jp - 1, c)));
            }
        }
        for (int c = 0; c < spec.edge_count; ++c) ft.at(e - 1, c) = row[c];
    }
    TransferModel m;
    m.ctx = spec.ctx;
    m.kind = ModelKind::Replacement;
    m.m3 = spec.m3();
    m.m4 = spec.m4();
    m.m5 = (int)spec.wiretap_edges.size();
    m.m6 = spec.m6();
    m.wiretap_edges = spec.wiretap_edges;
    m.inject_edges = spec.wiretap_edges;  // sorted; Z slots line up with Y_E rows
    m.K_B = select_cols(select_rows(t, spec.sink_edges), source_ids(spec));
    m.K_E = select_cols(select_rows(ft, spec.wiretap_edges), source_ids(spec));
    m.H_B = select_cols(select_rows(t, spec.sink_edges), spec.wiretap_edges);
    m.H_E = select_cols(select_rows(ft, spec.wiretap_edges), spec.wiretap_edges);
    fill_ranks(m);
    return m;
}

TransferModel compile_model(const NetworkSpec& spec) {
    switch (spec.model) {
        case ModelKind::Passive: return compile_passive(spec);
        case ModelKind::Addition: return compile_addition(spec);
        case ModelKind::Replacement: return compile_replacement(spec);
    }
    throw Error("bad model kind");
}

CausalReport check_causal(const TransferModel& model, const WindowSet& ws) {
    if ((int)ws.windows.size() != model.m5)
        throw DimensionError("window count must equal the injection count");
    CausalReport rep;
    for (std::size_t i = 0; i < ws.windows.size(); ++i) {
        int col = ws.order.empty() ? (int)i : ws.order[i];
        for (int j : ws.windows[i]) {
            if (j < 0 || j >= model.m6)
                throw DimensionError("window index out of range");
            if (model.H_E.at(j, col) != 0) {
                rep.ok = false;
                rep.violation = "A1: injection " + std::to_string(i + 1) +
                                " influences observed component " + std::to_string(j + 1);
                return rep;
            }
        }
    }
    for (std::size_t i = 1; i < ws.windows.size(); ++i) {
        std::set<int> prev(ws.windows[i - 1].begin(), ws.windows[i - 1].end());
        std::set<int> cur(ws.windows[i].begin(), ws.windows[i].end());
        if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
            rep.ok = false;
            rep.violation = "A2: window " + std::to_string(i) + " is not contained in window " +
                            std::to_string(i + 1);
            return rep;
        }
    }
    return rep;
}

OptimalWindows optimal_windows(const NetworkSpec& spec) {
    const int m7 = spec.edge_count;
    const int infinity = m7 + 1;
    Mat ta = edge_transfer(spec, true, nullptr);
    // gamma(edge) = first wiretapped edge its noise can reach along any path
    auto gamma_of = [&](int edge) {
        for (int j : spec.wiretap_edges) {
            if (j == edge) continue;
            if (ta.at(j - 1, edge - 1) != 0) return j;
        }
        return infinity;
    };
    std::vector<std::pair<int, int>> order;  // (gamma, edge id)
    for (int e : spec.inject_edges) order.emplace_back(gamma_of(e), e);
    std::sort(order.begin(), order.end());
    OptimalWindows out;
    for (auto& [g, e] : order) {
        out.eta_edges.push_back(e);
        out.gamma.push_back(g);
        std::vector<int> w;
        for (int j = 0; j < spec.m6(); ++j)
            if (spec.wiretap_edges[j] < g) w.push_back(j);
        out.windows.windows.push_back(std::move(w));
        auto it = std::find(spec.inject_edges.begin(), spec.inject_edges.end(), e);
        out.windows.order.push_back((int)(it - spec.inject_edges.begin()));
    }
    return out;
}

NodeAdversary nodes_to_edges(const NetworkSpec& spec,
                             const std::vector<std::string>& occupied) {
    std::set<std::string> nodes(occupied.begin(), occupied.end());
    std::set<std::string> known;
    for (const auto& [id, e] : spec.edges) {
        known.insert(e.tail);
        known.insert(e.head);
    }
    for (const auto& n : nodes)
        if (!known.count(n)) throw Error("unknown node '" + n + "'");
    std::vector<int> hit;
    for (const auto& [id, e] : spec.edges)
        if (nodes.count(e.tail) || nodes.count(e.head)) hit.push_back(id);
    std::sort(hit.begin(), hit.end());

    NodeAdversary adv;
    adv.spec = spec;
    bool touches_source =
        std::any_of(hit.begin(), hit.end(), [&](int j) { return j <= spec.source_count; });
    if (touches_source) {
        adv.spec = split_source_edges(spec);
        for (int& j : hit) j += spec.source_count;
    }
    adv.edges = hit;
    adv.spec.wiretap_edges = hit;
    adv.spec.inject_edges = hit;
    adv.spec.model = ModelKind::Addition;
    return adv;
}

std::vector<MulticastParams> multicast_params(const MulticastTable& table) {
    if (table.senders < 1) throw Error("multicast table has no senders");
    std::vector<MulticastParams> out((std::size_t)table.senders);
    for (int i = 1; i <= table.senders; ++i) {
        bool any_direct = false;
        MulticastParams p;
        for (const auto& [key, r] : table.rank_direct)
            if (key.first == i) {
                any_direct = true;
                p.m0 = std::max(p.m0, r);
            }
        if (!any_direct)
            throw Error("no direct-rank entry for sender " + std::to_string(i));
        for (const auto& [key, r] : table.rank_cross)
            if (key.first == i) p.m1 = std::max(p.m1, r);
        for (const auto& [key, r] : table.rank_leak)
            if (std::get<0>(key) == i) p.m2 = std::max(p.m2, r);
        out[(std::size_t)i - 1] = p;
    }
    return out;
}

}  // namespace secnet
