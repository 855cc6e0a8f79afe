#include "secnet/attack.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

#include "secnet/infoleak.hpp"

namespace secnet {

Channel linear_channel(const TransferModel& model, int n) {
    Channel ch;
    ch.ctx = model.ctx;
    ch.m3 = model.m3;
    ch.m4 = model.m4;
    ch.m5 = model.m5;
    ch.m6 = model.m6;
    ch.n = n;
    ch.linear = model;
    TransferModel m = model;
    ch.eval = [m](const Mat& x, const Mat* z) {
        Mat yb = m.K_B.empty() ? Mat(m.ctx, m.m4, x.cols) : mat_mul(m.K_B, x);
        Mat ye = m.K_E.empty() ? Mat(m.ctx, m.m6, x.cols) : mat_mul(m.K_E, x);
        if (z != nullptr && m.m5 > 0) {
            yb = mat_add(yb, mat_mul(m.H_B, *z));
            ye = mat_add(ye, mat_mul(m.H_E, *z));
        }
        return std::make_pair(std::move(yb), std::move(ye));
    };
    return ch;
}

Channel linear_channel_with_baseline(const TransferModel& model,
                                     const TransferModel& no_attack, int n) {
    Channel ch = linear_channel(model, n);
    TransferModel m = model;
    TransferModel base = no_attack;
    if (base.m4 != m.m4 || base.m3 != m.m3 || base.m6 != m.m6)
        throw DimensionError("baseline model has different endpoint dimensions");
    ch.eval = [m, base](const Mat& x, const Mat* z) {
        if (z == nullptr) {
            Mat yb = base.K_B.empty() ? Mat(base.ctx, base.m4, x.cols) : mat_mul(base.K_B, x);
            Mat ye = base.K_E.empty() ? Mat(base.ctx, base.m6, x.cols) : mat_mul(base.K_E, x);
            return std::make_pair(std::move(yb), std::move(ye));
        }
        Mat yb = mat_add(mat_mul(m.K_B, x), mat_mul(m.H_B, *z));
        Mat ye = mat_add(mat_mul(m.K_E, x), mat_mul(m.H_E, *z));
        return std::make_pair(std::move(yb), std::move(ye));
    };
    return ch;
}

std::uint64_t default_scramble_count(std::uint64_t q, int m3, int n,
                                     std::uint64_t message_count) {
    long double cap = std::pow((long double)q, (long double)m3 * n) / (long double)message_count;
    std::uint64_t l = 1;
    while ((long double)l * (long double)q <= cap) l *= q;
    return l;
}

Code identity_code(const ArithCtx& ctx, int m3, int n, std::uint64_t message_count) {
    Code c;
    c.ctx = ctx;
    c.m3 = m3;
    c.n = n;
    c.message_count = message_count;
    c.scramble_count = default_scramble_count(ctx.size(), m3, n, message_count);
    std::uint64_t q = ctx.size();
    std::uint64_t mc = message_count;
    c.encode = [ctx, m3, n, q, mc](std::uint64_t m, std::uint64_t l) {
        Mat x(ctx, m3, n);
        std::uint64_t code = m + mc * l;
        for (int t = 0; t < n; ++t)
            for (int r = 0; r < m3; ++r) {
                x.at(r, t) = (std::uint32_t)(code % q);
                code /= q;
            }
        return x;
    };
    return c;
}

Strategy Strategy::zero() { return Strategy{}; }

Strategy Strategy::linear(Mat g) {
    Strategy s;
    s.kind = StrategyKind::Linear;
    s.linear_map = std::move(g);
    return s;
}

Strategy Strategy::table(WindowSet ws,
                         std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> t) {
    Strategy s;
    s.kind = StrategyKind::Table;
    s.windows = std::move(ws);
    s.tables = std::move(t);
    return s;
}

Strategy parse_strategy(const std::string& text, const ArithCtx& ctx, int m5, int m6) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_tokens = [&](std::vector<std::string>& toks) {
        while (std::getline(in, line)) {
            ++lineno;
            std::string stripped = line.substr(0, line.find('#'));
            std::istringstream ls(stripped);
            toks.assign(std::istream_iterator<std::string>(ls), {});
            if (!toks.empty()) return true;
        }
        return false;
    };
    std::vector<std::string> toks;
    if (!next_tokens(toks) || toks[0] != "strategy" || toks.size() != 2)
        throw ParseError(lineno, "expected 'strategy zero|linear|table'");
    if (toks[1] == "zero") return Strategy::zero();
    if (toks[1] == "linear") {
        Mat g(ctx, m5, m6);
        for (int i = 0; i < m5; ++i) {
            if (!next_tokens(toks) || (int)toks.size() != m6)
                throw ParseError(lineno, "expected a row of " + std::to_string(m6) + " elements");
            for (int j = 0; j < m6; ++j) {
                std::uint64_t v = std::stoull(toks[(std::size_t)j]);
                if (!ctx.valid_element(v)) throw ParseError(lineno, "element out of range");
                g.at(i, j) = (std::uint32_t)v;
            }
        }
        return Strategy::linear(std::move(g));
    }
    if (toks[1] == "table") {
        WindowSet ws;
        ws.windows.resize((std::size_t)m5);
        std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> tables((std::size_t)m5);
        int cur = -1;
        while (next_tokens(toks)) {
            if (toks[0] == "alpha") {
                if (toks.size() < 3 || toks[2] != "window")
                    throw ParseError(lineno, "alpha <i> window <j...>");
                cur = (int)std::stoull(toks[1]) - 1;
                if (cur < 0 || cur >= m5) throw ParseError(lineno, "alpha index out of range");
                std::vector<int> w;
                for (std::size_t k = 3; k < toks.size(); ++k) {
                    int j = (int)std::stoull(toks[k]) - 1;
                    if (j < 0 || j >= m6) throw ParseError(lineno, "window index out of range");
                    w.push_back(j);
                }
                ws.windows[(std::size_t)cur] = std::move(w);
            } else {
                if (cur < 0) throw ParseError(lineno, "lookup line before any alpha");
                auto arrow = std::find(toks.begin(), toks.end(), "->");
                if (arrow == toks.end() || std::distance(arrow, toks.end()) != 2)
                    throw ParseError(lineno, "expected '<obs...> -> <z>'");
                std::vector<std::uint32_t> obs;
                for (auto it = toks.begin(); it != arrow; ++it) {
                    std::uint64_t v = std::stoull(*it);
                    if (!ctx.valid_element(v)) throw ParseError(lineno, "element out of range");
                    obs.push_back((std::uint32_t)v);
                }
                if (obs.size() != ws.windows[(std::size_t)cur].size())
                    throw ParseError(lineno, "observation width does not match the window");
                std::uint64_t z = std::stoull(toks.back());
                if (!ctx.valid_element(z)) throw ParseError(lineno, "element out of range");
                tables[(std::size_t)cur][obs] = (std::uint32_t)z;
            }
        }
        return Strategy::table(std::move(ws), std::move(tables));
    }
    throw ParseError(lineno, "unknown strategy kind '" + toks[1] + "'");
}

namespace {

std::uint64_t pack_mat(const Mat& m) {
    std::uint64_t code = 0;
    std::uint64_t q = m.ctx.size();
    for (std::size_t i = m.a.size(); i-- > 0;) code = code * q + m.a[i];
    return code;
}

void check_budget(const Code& code, std::uint64_t budget) {
    if (code.message_count == 0 || code.scramble_count == 0) throw Error("degenerate code");
    if (code.message_count > budget / std::max<std::uint64_t>(code.scramble_count, 1))
        throw BudgetError("enumeration budget exceeded: |M||L| > budget");
}

std::uint32_t apply_alpha(const Strategy& st, int i, const std::vector<std::uint32_t>& y,
                          const ArithCtx& f) {
    switch (st.kind) {
        case StrategyKind::Zero: return 0;
        case StrategyKind::Linear: {
            std::uint32_t acc = 0;
            for (int j = 0; j < st.linear_map.cols; ++j)
                if (st.linear_map.at(i, j) != 0)
                    acc = f.add(acc, f.mul(st.linear_map.at(i, j), y[(std::size_t)j]));
            return acc;
        }
        case StrategyKind::Table: {
            std::vector<std::uint32_t> obs;
            obs.reserve(st.windows.windows[(std::size_t)i].size());
            for (int j : st.windows.windows[(std::size_t)i]) obs.push_back(y[(std::size_t)j]);
            const auto& tab = st.tables[(std::size_t)i];
            auto it = tab.find(obs);
            if (it == tab.end()) throw Error("strategy table is not total");
            return it->second;
        }
    }
    return 0;
}

// Shared fixed-point solver; produces Z for one encoder output block.
class ActiveSolver {
public:
    ActiveSolver(const Channel& ch, const Strategy& st, std::uint64_t search_budget)
        : ch_(ch), st_(st), search_budget_(search_budget) {
        if (st_.kind == StrategyKind::Linear) {
            if (!ch_.linear) throw Error("linear strategies need a matrix channel");
            Mat ihg = mat_sub(Mat::identity(ch_.ctx, ch_.m6),
                              mat_mul(ch_.linear->H_E, st_.linear_map));
            if (mat_invertible(ihg))
                g_resolvent_ = mat_mul(st_.linear_map, mat_mul(mat_inverse(ihg), ch_.linear->K_E));
        } else if (st_.kind == StrategyKind::Table && ch_.linear &&
                   (int)st_.windows.windows.size() == ch_.m5) {
            causal_ = check_causal(*ch_.linear, st_.windows).ok;
        }
    }

    Mat solve_z(const Mat& x, std::uint64_t m, std::uint64_t l) const {
        Mat z(ch_.ctx, ch_.m5, ch_.n);
        if (st_.kind == StrategyKind::Zero) return z;
        if (st_.kind == StrategyKind::Linear) {
            if (!g_resolvent_) throw UniquenessError(m, l);
            for (int t = 0; t < ch_.n; ++t)
                for (int i = 0; i < ch_.m5; ++i) {
                    std::uint32_t acc = 0;
                    for (int r = 0; r < ch_.m3; ++r)
                        if (g_resolvent_->at(i, r) != 0)
                            acc = ch_.ctx.add(acc, ch_.ctx.mul(g_resolvent_->at(i, r), x.at(r, t)));
                    z.at(i, t) = acc;
                }
            return z;
        }
        if (causal_) {
            for (int t = 0; t < ch_.n; ++t) {
                auto zc = solve_causal_column(x, t);
                for (int i = 0; i < ch_.m5; ++i) z.at(i, t) = zc[(std::size_t)i];
            }
            return z;
        }
        if (ch_.n != 1 && !ch_.linear)
            throw Error("exhaustive fixed-point search needs n = 1 on table channels");
        for (int t = 0; t < ch_.n; ++t) {
            auto y = solve_exhaustive_column(x, t, m, l);
            auto zc = injections_for(y);
            for (int i = 0; i < ch_.m5; ++i) z.at(i, t) = zc[(std::size_t)i];
        }
        return z;
    }

private:
    // Injections in channel column order for one observed column. Window
    // entry i feeds column order[i] (or column i when no order is given).
    std::vector<std::uint32_t> injections_for(const std::vector<std::uint32_t>& y) const {
        std::vector<std::uint32_t> z((std::size_t)ch_.m5, 0);
        if (st_.kind == StrategyKind::Table && !st_.windows.order.empty()) {
            for (std::size_t i = 0; i < st_.windows.windows.size(); ++i)
                z[(std::size_t)st_.windows.order[i]] = apply_alpha(st_, (int)i, y, ch_.ctx);
        } else {
            for (int i = 0; i < ch_.m5; ++i) z[(std::size_t)i] = apply_alpha(st_, i, y, ch_.ctx);
        }
        return z;
    }

    // z in channel column order for one transmission column.
    std::vector<std::uint32_t> solve_causal_column(const Mat& x, int col) const {
        const TransferModel& m = *ch_.linear;
        const ArithCtx& f = ch_.ctx;
        std::vector<std::uint32_t> kex((std::size_t)ch_.m6, 0);
        for (int j = 0; j < ch_.m6; ++j) {
            std::uint32_t acc = 0;
            for (int r = 0; r < ch_.m3; ++r)
                if (m.K_E.at(j, r) != 0) acc = f.add(acc, f.mul(m.K_E.at(j, r), x.at(r, col)));
            kex[(std::size_t)j] = acc;
        }
        std::vector<std::uint32_t> zw((std::size_t)ch_.m5, 0);  // window-listed order
        std::vector<std::uint32_t> y = kex;
        for (std::size_t i = 0; i < st_.windows.windows.size(); ++i) {
            for (int j : st_.windows.windows[i]) {
                std::uint32_t acc = kex[(std::size_t)j];
                for (std::size_t ip = 0; ip < i; ++ip) {
                    int colz = st_.windows.order.empty() ? (int)ip : st_.windows.order[ip];
                    if (m.H_E.at(j, colz) != 0)
                        acc = f.add(acc, f.mul(m.H_E.at(j, colz), zw[ip]));
                }
                y[(std::size_t)j] = acc;
            }
            zw[i] = apply_alpha(st_, (int)i, y, f);
        }
        std::vector<std::uint32_t> z((std::size_t)ch_.m5, 0);
        for (std::size_t i = 0; i < zw.size(); ++i) {
            int colz = st_.windows.order.empty() ? (int)i : st_.windows.order[i];
            z[(std::size_t)colz] = zw[i];
        }
        return z;
    }

    std::vector<std::uint32_t> solve_exhaustive_column(const Mat& x, int col, std::uint64_t m,
                                                       std::uint64_t l) const {
        std::uint64_t q = ch_.ctx.size();
        long double space = std::pow((long double)q, ch_.m6);
        if (space > (long double)search_budget_)
            throw BudgetError("fixed-point candidate space exceeds the search budget");
        Mat xcol(ch_.ctx, ch_.m3, 1);
        for (int r = 0; r < ch_.m3; ++r) xcol.at(r, 0) = x.at(r, col);
        std::optional<std::vector<std::uint32_t>> found;
        std::vector<std::uint32_t> y((std::size_t)ch_.m6, 0);
        std::uint64_t count = (std::uint64_t)space;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::uint64_t v = c;
            for (int j = 0; j < ch_.m6; ++j) {
                y[(std::size_t)j] = (std::uint32_t)(v % q);
                v /= q;
            }
            auto zc = injections_for(y);
            Mat z(ch_.ctx, ch_.m5, 1);
            for (int i = 0; i < ch_.m5; ++i) z.at(i, 0) = zc[(std::size_t)i];
            auto [yb, ye] = ch_.eval(xcol, &z);
            (void)yb;
            bool match = true;
            for (int j = 0; j < ch_.m6; ++j)
                if (ye.at(j, 0) != y[(std::size_t)j]) { match = false; break; }
            if (match) {
                if (found) throw UniquenessError(m, l);
                found = y;
            }
        }
        if (!found) throw UniquenessError(m, l);
        return *found;
    }

    const Channel& ch_;
    const Strategy& st_;
    std::uint64_t search_budget_;
    std::optional<Mat> g_resolvent_;
    bool causal_ = false;
};

}  // namespace

JointDist run_passive(const Code& code, const Channel& ch, std::uint64_t budget) {
    check_budget(code, budget);
    std::uint64_t q = ch.ctx.size();
    JointDist dist({VarSpec{"M", 1, code.message_count},
                    VarSpec{"YB", ch.m4 * ch.n, q},
                    VarSpec{"YE", ch.m6 * ch.n, q}});
    Rational p(1, (std::int64_t)(code.message_count * code.scramble_count));
    for (std::uint64_t m = 0; m < code.message_count; ++m)
        for (std::uint64_t l = 0; l < code.scramble_count; ++l) {
            Mat x = code.encode(m, l);
            auto [yb, ye] = ch.eval(x, nullptr);
            dist.add({m, pack_mat(yb), pack_mat(ye)}, p);
        }
    return dist;
}

JointDist run_active(const Code& code, const Channel& ch, const Strategy& st,
                     std::uint64_t budget, std::uint64_t search_budget) {
    check_budget(code, budget);
    std::uint64_t q = ch.ctx.size();
    JointDist dist({VarSpec{"M", 1, code.message_count},
                    VarSpec{"YB", ch.m4 * ch.n, q},
                    VarSpec{"YE", ch.m6 * ch.n, q},
                    VarSpec{"Z", ch.m5 * ch.n, q}});
    Rational p(1, (std::int64_t)(code.message_count * code.scramble_count));
    ActiveSolver solver(ch, st, search_budget);
    for (std::uint64_t m = 0; m < code.message_count; ++m)
        for (std::uint64_t l = 0; l < code.scramble_count; ++l) {
            Mat x = code.encode(m, l);
            Mat z = solver.solve_z(x, m, l);
            auto [yb, ye] = ch.eval(x, &z);
            dist.add({m, pack_mat(yb), pack_mat(ye), pack_mat(z)}, p);
        }
    return dist;
}

ReductionResult reduction_check(const Code& code, const Channel& ch, const Strategy& st,
                                std::uint64_t budget, std::uint64_t search_budget) {
    check_budget(code, budget);
    std::uint64_t q = ch.ctx.size();
    JointDist passive({VarSpec{"M", 1, code.message_count}, VarSpec{"YE", ch.m6 * ch.n, q}});
    JointDist active({VarSpec{"M", 1, code.message_count}, VarSpec{"YE", ch.m6 * ch.n, q}});
    Rational p(1, (std::int64_t)(code.message_count * code.scramble_count));
    ActiveSolver solver(ch, st, search_budget);

    std::map<std::uint64_t, std::uint64_t> fwd;  // passive view -> active view
    std::map<std::uint64_t, std::uint64_t> bwd;
    bool fwd_ok = true, bwd_ok = true;
    std::string witness;

    for (std::uint64_t m = 0; m < code.message_count; ++m)
        for (std::uint64_t l = 0; l < code.scramble_count; ++l) {
            Mat x = code.encode(m, l);
            auto [yb_p, ye_p] = ch.eval(x, nullptr);
            (void)yb_p;
            Mat z = solver.solve_z(x, m, l);
            auto [yb_a, ye_a] = ch.eval(x, &z);
            (void)yb_a;
            std::uint64_t yp = pack_mat(ye_p);
            std::uint64_t ya = pack_mat(ye_a);
            passive.add({m, yp}, p);
            active.add({m, ya}, p);
            auto fit = fwd.find(yp);
            if (fit == fwd.end())
                fwd.emplace(yp, ya);
            else if (fit->second != ya && fwd_ok) {
                fwd_ok = false;
                witness = "passive view " + std::to_string(yp) + " maps to active views " +
                          std::to_string(fit->second) + " and " + std::to_string(ya);
            }
            auto bit = bwd.find(ya);
            if (bit == bwd.end())
                bwd.emplace(ya, yp);
            else if (bit->second != yp && bwd_ok) {
                bwd_ok = false;
                if (witness.empty())
                    witness = "active view " + std::to_string(ya) + " maps to passive views " +
                              std::to_string(bit->second) + " and " + std::to_string(yp);
            }
        }

    ReductionResult res;
    res.active_from_passive = fwd_ok;
    res.passive_from_active = bwd_ok;
    res.info_passive_bits = mutual_info(passive, {"M"}, {"YE"}, LogBase::Two).value;
    res.info_active_bits = mutual_info(active, {"M"}, {"YE"}, LogBase::Two).value;
    res.witness = witness;
    if (fwd_ok && bwd_ok)
        res.verdict = ReductionVerdict::Equivalent;
    else if (res.info_active_bits > res.info_passive_bits + 1e-9)
        res.verdict = ReductionVerdict::Leakier;
    else
        res.verdict = ReductionVerdict::Inconclusive;
    return res;
}

}  // namespace secnet
