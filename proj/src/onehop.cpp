#include "secnet/onehop.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "secnet/infoleak.hpp"

namespace secnet {

std::pair<std::uint32_t, std::uint32_t> OneHopCode::encode(std::uint32_t m,
                                                           std::uint32_t l) const {
    if (encoder == Encoder::Standard)
        return {zd.add(m, l), l};
    return encoder_table[(std::size_t)m * d + l];
}

std::pair<std::uint32_t, std::uint32_t> OneHopCode::relay(std::uint32_t y1,
                                                          std::uint32_t y2) const {
    return {relay3[y1][y2], relay4[y1][y2]};
}

OneHopCode make_standard_code(std::uint64_t d, RelayTable t3, RelayTable t4) {
    OneHopCode c;
    c.d = d;
    c.zd = ArithCtx::ring(d);
    c.encoder = OneHopCode::Encoder::Standard;
    c.relay3 = std::move(t3);
    c.relay4 = std::move(t4);
    return c;
}

OneHopCode binary_counterexample() {
    OneHopCode c;
    c.d = 2;
    c.zd = ArithCtx::ring(2);
    c.encoder = OneHopCode::Encoder::Table;
    c.encoder_table.resize(4);
    for (std::uint32_t m = 0; m < 2; ++m)
        for (std::uint32_t l = 0; l < 2; ++l)
            c.encoder_table[(std::size_t)m * 2 + l] = {l, (m + l) % 2};
    c.relay3 = {{0, 0}, {1, 0}};  // i*(j+1)
    c.relay4 = {{0, 1}, {0, 0}};  // (i+1)*j
    return c;
}

namespace {

bool has_duplicate(const std::vector<std::uint32_t>& v) {
    std::set<std::uint32_t> s(v.begin(), v.end());
    return s.size() != v.size();
}

bool is_anti_latin(const RelayTable& t, std::uint64_t d, std::string* witness,
                   const char* label) {
    for (std::uint64_t i = 0; i < d; ++i)
        if (!has_duplicate(t[i])) {
            if (witness) *witness = std::string(label) + ": row " + std::to_string(i) +
                                    " has no duplicate";
            return false;
        }
    for (std::uint64_t j = 0; j < d; ++j) {
        std::vector<std::uint32_t> col(d);
        for (std::uint64_t i = 0; i < d; ++i) col[i] = t[i][j];
        if (!has_duplicate(col)) {
            if (witness) *witness = std::string(label) + ": column " + std::to_string(j) +
                                    " has no duplicate";
            return false;
        }
    }
    return true;
}

void check_table(const RelayTable& t, std::uint64_t d, const char* label) {
    if (t.size() != d) throw DimensionError(std::string(label) + " has wrong row count");
    for (const auto& row : t) {
        if (row.size() != d) throw DimensionError(std::string(label) + " has wrong column count");
        for (auto v : row)
            if (v >= d) throw Error(std::string(label) + " entry out of range");
    }
}

// fibers[a][m] = set (bitmask for d <= 64) of t4 values on the offset-m
// diagonal cells where t3 equals a
bool fibers_disjoint(const RelayTable& t3, const RelayTable& t4, std::uint64_t d,
                     std::string* witness) {
    for (std::uint64_t a = 0; a < d; ++a) {
        std::vector<std::uint64_t> masks(d, 0);
        for (std::uint64_t m = 0; m < d; ++m)
            for (std::uint64_t i = 0; i < d; ++i) {
                std::uint64_t j = (i + m) % d;
                if (t3[i][j] == a) masks[m] |= std::uint64_t{1} << t4[i][j];
            }
        std::uint64_t seen = 0;
        for (std::uint64_t m = 0; m < d; ++m) {
            if (masks[m] & seen) {
                if (witness)
                    *witness = "fibers collide at relay value " + std::to_string(a) +
                               ", offset " + std::to_string(m);
                return false;
            }
            seen |= masks[m];
        }
    }
    return true;
}

}  // namespace

ALSVerdict verify_pair(const RelayTable& t3, const RelayTable& t4, std::uint64_t d) {
    if (d < 2 || d > 64) throw Error("table alphabet out of supported range");
    check_table(t3, d, "first relay table");
    check_table(t4, d, "second relay table");
    ALSVerdict v;
    v.anti_latin_3 = is_anti_latin(t3, d, &v.witness, "first table");
    v.anti_latin_4 = is_anti_latin(t4, d, v.anti_latin_3 ? &v.witness : nullptr, "second table");
    v.fibers_disjoint = fibers_disjoint(t3, t4, d,
                                        (v.anti_latin_3 && v.anti_latin_4) ? &v.witness : nullptr);
    v.decodable = v.anti_latin_3 && v.anti_latin_4 && v.fibers_disjoint;
    if (v.decodable) v.witness.clear();
    return v;
}

namespace {

RelayTable blank(std::uint64_t d) {
    return RelayTable(d, std::vector<std::uint32_t>(d, UINT32_MAX));
}

void put(RelayTable& t, std::uint64_t d, std::uint64_t i, std::uint64_t j, std::uint64_t v) {
    std::uint64_t ii = i % d, jj = j % d;
    if (t[ii][jj] != UINT32_MAX) throw Error("construction wrote a cell twice");
    t[ii][jj] = (std::uint32_t)(v % d);
}

void check_full(const RelayTable& t, std::uint64_t d) {
    for (std::uint64_t i = 0; i < d; ++i)
        for (std::uint64_t j = 0; j < d; ++j)
            if (t[i][j] == UINT32_MAX) throw Error("construction left a cell unset");
}

}  // namespace

std::pair<RelayTable, RelayTable> construct_odd(std::uint64_t d) {
    if (d < 3 || d % 2 == 0) throw Error("odd construction needs odd d >= 3");
    std::uint64_t ell = (d - 1) / 2;
    RelayTable t3 = blank(d), t4 = blank(d);
    for (std::uint64_t k = 0; k < d; ++k) {
        // row k over columns k-ell..k, and column k over rows k-ell..k
        put(t3, d, k, k, k);
        for (std::uint64_t s = 1; s <= ell; ++s) {
            put(t3, d, k, k + d - s, k);
            put(t3, d, k + d - s, k, k);
        }
        // values j on row k columns k-ell..k; k+ell+1-s on column k rows k-s
        put(t4, d, k, k, k);
        for (std::uint64_t s = 1; s <= ell; ++s) {
            put(t4, d, k, k + d - s, k + d - s);
            put(t4, d, k + d - s, k, k + ell + 1 - s);
        }
    }
    check_full(t3, d);
    check_full(t4, d);
    return {t3, t4};
}

std::pair<RelayTable, RelayTable> construct_even(std::uint64_t d) {
    if (d < 4 || d % 2 != 0) throw Error("even construction needs even d >= 4");
    std::uint64_t ell = d / 2;
    RelayTable t3 = blank(d), t4 = blank(d);
    for (std::uint64_t k = 0; k < d; ++k) {
        // row k+1 over columns k-ell+1..k, and column k over rows k-ell+1..k
        for (std::uint64_t s = 0; s < ell; ++s) {
            put(t3, d, k + 1, k + d - s, k);
            put(t3, d, k + d - s, k, k);
        }
        for (std::uint64_t tt = 0; tt + 2 <= ell; ++tt)
            put(t4, d, k + 1, k + d - ell + 1 + tt, k + ell + tt);
        put(t4, d, k + 1, k, k + ell - 1);
        for (std::uint64_t s = 0; s < ell; ++s)
            put(t4, d, k + d - s, k, k + ell - 2 - s + d);
    }
    check_full(t3, d);
    check_full(t4, d);
    return {t3, t4};
}

namespace {

std::vector<RelayTable> anti_latin_tables(std::uint64_t d, bool pin_first_cell) {
    std::uint64_t cells = d * d;
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < cells; ++i) total *= d;
    std::vector<RelayTable> out;
    RelayTable t(d, std::vector<std::uint32_t>(d, 0));
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t v = code;
        for (std::uint64_t i = 0; i < d; ++i)
            for (std::uint64_t j = 0; j < d; ++j) {
                t[i][j] = (std::uint32_t)(v % d);
                v /= d;
            }
        if (pin_first_cell && t[0][0] != 0) continue;
        if (!is_anti_latin(t, d, nullptr, "")) continue;
        out.push_back(t);
    }
    return out;
}

}  // namespace

std::vector<std::pair<RelayTable, RelayTable>> search_pairs(std::uint64_t d,
                                                            std::uint64_t budget,
                                                            int jobs) {
    if (d != 2 && d != 3) throw Error("exhaustive pair search supports d = 2 and d = 3 only");
    if (budget == 0) throw BudgetError("search budget is zero");
    auto list3 = anti_latin_tables(d, true);
    auto list4 = anti_latin_tables(d, false);
    std::uint64_t work = (std::uint64_t)list3.size() * list4.size();
    if (work > budget)
        throw BudgetError("pair space " + std::to_string(work) + " exceeds the budget");
    int nthreads = std::max(1, jobs);
    std::vector<std::vector<std::pair<RelayTable, RelayTable>>> found((std::size_t)nthreads);
    auto worker = [&](int w) {
        for (std::size_t i = (std::size_t)w; i < list3.size(); i += (std::size_t)nthreads)
            for (const auto& t4 : list4)
                if (fibers_disjoint(list3[i], t4, d, nullptr))
                    found[(std::size_t)w].emplace_back(list3[i], t4);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    // deterministic order regardless of partitioning: sort by table codes
    std::vector<std::pair<RelayTable, RelayTable>> out;
    for (auto& part : found)
        out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    return out;
}

JointDist onehop_passive_dist(const OneHopCode& code) {
    std::uint64_t d = code.d;
    JointDist dist({VarSpec{"M", 1, d}, VarSpec{"Y1", 1, d}, VarSpec{"Y2", 1, d},
                    VarSpec{"Y3", 1, d}, VarSpec{"Y4", 1, d}});
    Rational p(1, (std::int64_t)(d * d));
    for (std::uint32_t m = 0; m < d; ++m)
        for (std::uint32_t l = 0; l < d; ++l) {
            auto [y1, y2] = code.encode(m, l);
            auto [y3, y4] = code.relay(y1, y2);
            dist.add({m, y1, y2, y3, y4}, p);
        }
    return dist;
}

std::optional<std::uint32_t> onehop_decode(const OneHopCode& code, std::uint32_t y3,
                                           std::uint32_t y4) {
    // unique offset m with y4 in the fiber of (y3, m); message = -m mod d
    std::uint64_t d = code.d;
    std::optional<std::uint32_t> message;
    for (std::uint32_t off = 0; off < d; ++off) {
        for (std::uint32_t i = 0; i < d; ++i) {
            std::uint32_t j = (std::uint32_t)((i + off) % d);
            if (code.relay3[i][j] == y3 && code.relay4[i][j] == y4) {
                std::uint32_t msg = (std::uint32_t)((d - off) % d);
                if (message && *message != msg) return std::nullopt;
                message = msg;
            }
        }
    }
    return message;
}

Channel onehop_channel(const OneHopCode& code, int attack_edge, int observe_edge) {
    if (attack_edge != 1 && attack_edge != 2) throw Error("attacked edge must be 1 or 2");
    if (observe_edge != 3 && observe_edge != 4) throw Error("observed edge must be 3 or 4");
    Channel ch;
    ch.ctx = code.zd;
    ch.m3 = 2;
    ch.m4 = 2;
    ch.m5 = 1;
    ch.m6 = 2;
    ch.n = 1;
    OneHopCode c = code;
    ch.eval = [c, attack_edge, observe_edge](const Mat& x, const Mat* z) {
        std::uint32_t y1 = x.at(0, 0), y2 = x.at(1, 0);
        std::uint32_t read = attack_edge == 1 ? y1 : y2;
        std::uint32_t in1 = y1, in2 = y2;
        if (z != nullptr) {
            if (attack_edge == 1) in1 = z->at(0, 0);
            else in2 = z->at(0, 0);
        }
        auto [y3, y4] = c.relay(in1, in2);
        Mat yb(c.zd, 2, 1), ye(c.zd, 2, 1);
        yb.at(0, 0) = y3;
        yb.at(1, 0) = y4;
        ye.at(0, 0) = read;
        ye.at(1, 0) = observe_edge == 3 ? y3 : y4;
        return std::make_pair(yb, ye);
    };
    return ch;
}

Code onehop_code_adapter(const OneHopCode& code) {
    Code c;
    c.ctx = code.zd;
    c.m3 = 2;
    c.n = 1;
    c.message_count = code.d;
    c.scramble_count = code.d;
    OneHopCode oh = code;
    c.encode = [oh](std::uint64_t m, std::uint64_t l) {
        auto [y1, y2] = oh.encode((std::uint32_t)m, (std::uint32_t)l);
        Mat x(oh.zd, 2, 1);
        x.at(0, 0) = y1;
        x.at(1, 0) = y2;
        return x;
    };
    return c;
}

Strategy replacement_strategy(const ArithCtx& zd, const std::vector<std::uint32_t>& fn) {
    if (fn.size() != zd.size()) throw Error("replacement function must be total");
    WindowSet ws;
    ws.windows = {{0}};  // keyed on the attacked edge's own reading
    std::map<std::vector<std::uint32_t>, std::uint32_t> table;
    for (std::uint32_t v = 0; v < fn.size(); ++v) table[{v}] = fn[v];
    return Strategy::table(std::move(ws), {std::move(table)});
}

Rational max_recovery_probability(const JointDist& dist, const std::string& secret,
                                  const std::vector<std::string>& view) {
    std::vector<std::string> all{secret};
    all.insert(all.end(), view.begin(), view.end());
    auto joint = dist.marginal_by_name(all);
    std::map<std::vector<std::uint64_t>, Rational> best;
    for (const auto& [key, p] : joint) {
        std::vector<std::uint64_t> v(key.begin() + 1, key.end());
        auto it = best.find(v);
        if (it == best.end())
            best.emplace(std::move(v), p);
        else if (it->second < p)
            it->second = p;
    }
    Rational total;
    for (const auto& [k, p] : best) total += p;
    return total;
}

double onehop_odd_leak_bits(std::uint64_t d) {
    double dd = (double)d;
    return (dd + 1) / 2 * (1 / dd) * std::log2(2 * dd / (dd + 1)) +
           (dd - 1) / 2 * (1 / dd) * std::log2(dd);
}

double onehop_even_leak_aligned_bits(std::uint64_t d) {
    return 0.5 + 0.5 * std::log2((double)d);
}

double onehop_even_leak_cross_bits(std::uint64_t d) {
    double dd = (double)d;
    return (dd + 2) / 2 * (1 / dd) * std::log2(2 * dd / (dd + 2)) +
           (dd - 2) / 2 * (1 / dd) * std::log2(dd);
}

LeakageProfile leakage_profile(const OneHopCode& code) {
    JointDist dist = onehop_passive_dist(code);
    LeakageProfile prof;
    const char* enames[4] = {"Y1", "Y2", "Y3", "Y4"};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            prof.mi_bits[i][j] =
                mutual_info(dist, {"M"}, {enames[i], enames[2 + j]}, LogBase::Two).value;
            prof.d1[i][j] = l1_security(dist, "M", {enames[i], enames[2 + j]});
        }
    if (code.encoder == OneHopCode::Encoder::Standard && code.d >= 3) {
        if (code.d % 2 == 1) {
            auto [t3, t4] = construct_odd(code.d);
            if (t3 == code.relay3 && t4 == code.relay4) {
                prof.closed = LeakageProfile::Closed::Odd;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        prof.closed_bits[i][j] = onehop_odd_leak_bits(code.d);
            }
        } else {
            auto [t3, t4] = construct_even(code.d);
            if (t3 == code.relay3 && t4 == code.relay4) {
                prof.closed = LeakageProfile::Closed::Even;
                prof.closed_bits[0][0] = onehop_even_leak_aligned_bits(code.d);  // (Y1,Y3)
                prof.closed_bits[1][1] = onehop_even_leak_aligned_bits(code.d);  // (Y2,Y4)
                prof.closed_bits[1][0] = onehop_even_leak_cross_bits(code.d);    // (Y2,Y3)
                prof.closed_bits[0][1] = onehop_even_leak_cross_bits(code.d);    // (Y1,Y4)
            }
        }
        if (prof.closed != LeakageProfile::Closed::None)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    prof.max_abs_gap = std::max(
                        prof.max_abs_gap, std::abs(prof.mi_bits[i][j] - prof.closed_bits[i][j]));
    }
    return prof;
}

namespace {

RelayTable decode_table2(std::uint32_t code) {
    RelayTable t(2, std::vector<std::uint32_t>(2, 0));
    t[0][0] = code & 1;
    t[0][1] = (code >> 1) & 1;
    t[1][0] = (code >> 2) & 1;
    t[1][1] = (code >> 3) & 1;
    return t;
}

// C1: M recoverable from (Y3, Y4); C2: not recoverable from any single-edge
// pair (Y_i, Y_j), i in {1,2}, j in {3,4}. Standard encoder over Z2.
struct BinaryCodeView {
    // per (m, l): wire values
    std::uint32_t y1[2][2], y2[2][2], y3[2][2], y4[2][2];
};

BinaryCodeView view_of(const RelayTable& t3, const RelayTable& t4) {
    BinaryCodeView v;
    for (std::uint32_t m = 0; m < 2; ++m)
        for (std::uint32_t l = 0; l < 2; ++l) {
            std::uint32_t a = (m + l) % 2, b = l;
            v.y1[m][l] = a;
            v.y2[m][l] = b;
            v.y3[m][l] = t3[a][b];
            v.y4[m][l] = t4[a][b];
        }
    return v;
}

bool recoverable(const BinaryCodeView& v, std::uint32_t (BinaryCodeView::*wa)[2][2],
                 std::uint32_t (BinaryCodeView::*wb)[2][2]) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<std::uint32_t>> seen;
    for (std::uint32_t m = 0; m < 2; ++m)
        for (std::uint32_t l = 0; l < 2; ++l)
            seen[{(v.*wa)[m][l], (v.*wb)[m][l]}].insert(m);
    for (const auto& [k, ms] : seen)
        if (ms.size() > 1) return false;
    return true;
}

}  // namespace

RelayAudit classify_binary_relays() {
    RelayAudit audit;
    for (std::uint32_t c3 = 0; c3 < 16; ++c3)
        for (std::uint32_t c4 = 0; c4 < 16; ++c4) {
            RelayTable t3 = decode_table2(c3), t4 = decode_table2(c4);
            BinaryCodeView v = view_of(t3, t4);
            bool c1 = recoverable(v, &BinaryCodeView::y3, &BinaryCodeView::y4);
            if (!c1) continue;
            bool leak = recoverable(v, &BinaryCodeView::y1, &BinaryCodeView::y3) ||
                        recoverable(v, &BinaryCodeView::y1, &BinaryCodeView::y4) ||
                        recoverable(v, &BinaryCodeView::y2, &BinaryCodeView::y3) ||
                        recoverable(v, &BinaryCodeView::y2, &BinaryCodeView::y4);
            if (leak) continue;
            audit.survivors.emplace_back(std::move(t3), std::move(t4));
        }
    audit.survivor_count = (int)audit.survivors.size();

    // per-wire relabeling orbit of the counterexample relay under the fixed
    // standard encoder
    RelayTable base3 = {{0, 0}, {1, 0}}, base4 = {{0, 1}, {0, 0}};
    std::set<std::pair<RelayTable, RelayTable>> orbit;
    for (int f1 = 0; f1 < 2; ++f1)
        for (int f2 = 0; f2 < 2; ++f2)
            for (int f3 = 0; f3 < 2; ++f3)
                for (int f4 = 0; f4 < 2; ++f4) {
                    RelayTable t3(2, std::vector<std::uint32_t>(2)), t4 = t3;
                    for (std::uint32_t a = 0; a < 2; ++a)
                        for (std::uint32_t b = 0; b < 2; ++b) {
                            std::uint32_t u = a ^ (std::uint32_t)f1, w = b ^ (std::uint32_t)f2;
                            t3[a][b] = base3[u][w] ^ (std::uint32_t)f3;
                            t4[a][b] = base4[u][w] ^ (std::uint32_t)f4;
                        }
                    orbit.insert({t3, t4});
                }
    audit.orbit_size = (int)orbit.size();
    audit.all_survivors_in_orbit = true;
    for (const auto& s : audit.survivors)
        if (!orbit.count(s)) audit.all_survivors_in_orbit = false;
    return audit;
}

RandomizedRelayReport randomized_relay_demo() {
    // encoder Y1 = L, Y2 = M + L; relay draws its own scramble L':
    // Y3 = Y1 + Y2 + L', Y4 = L'
    RandomizedRelayReport rep;
    JointDist dist({VarSpec{"M", 1, 2}, VarSpec{"Y1", 1, 2}, VarSpec{"Y2", 1, 2},
                    VarSpec{"Y3", 1, 2}, VarSpec{"Y4", 1, 2}});
    Rational p(1, 8);
    rep.decoder_ok = true;
    for (std::uint32_t m = 0; m < 2; ++m)
        for (std::uint32_t l = 0; l < 2; ++l)
            for (std::uint32_t lp = 0; lp < 2; ++lp) {
                std::uint32_t y1 = l, y2 = (m + l) % 2;
                std::uint32_t y3 = (y1 + y2 + lp) % 2, y4 = lp;
                if ((y3 + y4) % 2 != m) rep.decoder_ok = false;
                dist.add({m, y1, y2, y3, y4}, p);
            }
    const char* enames[4] = {"Y1", "Y2", "Y3", "Y4"};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rep.passive_mi_bits[i][j] =
                mutual_info(dist, {"M"}, {enames[i], enames[2 + j]}, LogBase::Two).value;

    // constant replacement of Y1 or Y2, each downstream observation
    rep.max_active_recovery = Rational(0);
    for (int attacked = 1; attacked <= 2; ++attacked)
        for (std::uint32_t constant = 0; constant < 2; ++constant)
            for (int observed = 3; observed <= 4; ++observed) {
                JointDist adist({VarSpec{"M", 1, 2}, VarSpec{"R", 1, 2}, VarSpec{"O", 1, 2}});
                for (std::uint32_t m = 0; m < 2; ++m)
                    for (std::uint32_t l = 0; l < 2; ++l)
                        for (std::uint32_t lp = 0; lp < 2; ++lp) {
                            std::uint32_t y1 = l, y2 = (m + l) % 2;
                            std::uint32_t read = attacked == 1 ? y1 : y2;
                            std::uint32_t in1 = attacked == 1 ? constant : y1;
                            std::uint32_t in2 = attacked == 2 ? constant : y2;
                            std::uint32_t y3 = (in1 + in2 + lp) % 2, y4 = lp;
                            adist.add({m, read, observed == 3 ? y3 : y4}, p);
                        }
                Rational rec = max_recovery_probability(adist, "M", {"R", "O"});
                if (rep.max_active_recovery < rec) rep.max_active_recovery = rec;
            }
    return rep;
}

}  // namespace secnet
