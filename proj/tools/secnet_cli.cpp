// Command-line front end: network compilation reports, attack simulation,
// reduction checks, hashing audits, robust-code Monte Carlo, one-hop relay
// analysis, rate planning and multicast parameter folding.

#include <CLI11.hpp>

#include <secnet/attack.hpp>
#include <secnet/infoleak.hpp>
#include <secnet/network.hpp>
#include <secnet/onehop.hpp>
#include <secnet/robust.hpp>
#include <secnet/seccode.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

using namespace secnet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFinding = 3;
constexpr int kExitModel = 4;

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void print_matrix(const std::string& name, const Mat& m) {
    std::printf("%s (%dx%d):\n", name.c_str(), m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        std::printf(" ");
        for (int c = 0; c < m.cols; ++c) std::printf(" %u", m.at(r, c));
        std::printf("\n");
    }
}

void print_matrix_csv(const std::string& name, const Mat& m) {
    for (int r = 0; r < m.rows; ++r) {
        std::printf("%s,%d", name.c_str(), r);
        for (int c = 0; c < m.cols; ++c) std::printf(",%u", m.at(r, c));
        std::printf("\n");
    }
}

std::uint64_t env_seed(std::uint64_t fallback) {
    const char* s = std::getenv("SECNET_SEED");
    if (s == nullptr) return fallback;
    return std::strtoull(s, nullptr, 0);
}

Code parse_code_file(const std::string& text, const ArithCtx& ctx, int m3, int n) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::uint64_t mc = 0, lc = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, Mat> table;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::vector<std::string> toks{std::istream_iterator<std::string>(ls), {}};
        if (toks.empty()) continue;
        if (toks[0] == "code") {
            if (toks.size() != 3) throw ParseError(lineno, "code <|M|> <|L|>");
            mc = std::stoull(toks[1]);
            lc = std::stoull(toks[2]);
        } else if (toks[0] == "map") {
            if ((int)toks.size() != 3 + m3 * n)
                throw ParseError(lineno, "map <m> <l> <" + std::to_string(m3 * n) +
                                             " symbols, column-major>");
            std::uint64_t m = std::stoull(toks[1]), l = std::stoull(toks[2]);
            Mat x(ctx, m3, n);
            for (int t = 0; t < n; ++t)
                for (int r = 0; r < m3; ++r) {
                    std::uint64_t v = std::stoull(toks[(std::size_t)(3 + t * m3 + r)]);
                    if (!ctx.valid_element(v)) throw ParseError(lineno, "element out of range");
                    x.at(r, t) = (std::uint32_t)v;
                }
            table[{m, l}] = std::move(x);
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (mc == 0 || lc == 0) throw Error("code file must declare 'code <|M|> <|L|>'");
    if (table.size() != mc * lc) throw Error("code table is not total on messages x scrambles");
    Code code;
    code.ctx = ctx;
    code.m3 = m3;
    code.n = n;
    code.message_count = mc;
    code.scramble_count = lc;
    auto shared = std::make_shared<decltype(table)>(std::move(table));
    code.encode = [shared](std::uint64_t m, std::uint64_t l) { return shared->at({m, l}); };
    return code;
}

RelayTable read_grid(std::istream& in, std::uint64_t d, int& lineno) {
    RelayTable t;
    std::string line;
    while ((std::uint64_t)t.size() < d && std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line.substr(0, line.find('#')));
        std::vector<std::string> toks{std::istream_iterator<std::string>(ls), {}};
        if (toks.empty()) continue;
        if (toks.size() != d)
            throw ParseError(lineno, "expected a row of " + std::to_string(d) + " entries");
        std::vector<std::uint32_t> row;
        for (auto& s : toks) row.push_back((std::uint32_t)std::stoul(s));
        t.push_back(std::move(row));
    }
    if ((std::uint64_t)t.size() != d) throw Error("pair file ended early");
    return t;
}

std::vector<std::string> intermediate_nodes(const NetworkSpec& spec) {
    std::set<std::string> excluded, all;
    for (int j = 1; j <= spec.source_count; ++j) {
        auto it = spec.edges.find(j);
        if (it != spec.edges.end()) excluded.insert(it->second.tail);
    }
    for (int j : spec.sink_edges) {
        auto it = spec.edges.find(j);
        if (it != spec.edges.end()) excluded.insert(it->second.head);
    }
    for (const auto& [id, e] : spec.edges) {
        all.insert(e.tail);
        all.insert(e.head);
    }
    std::vector<std::string> out;
    for (const auto& n : all)
        if (!excluded.count(n)) out.push_back(n);
    return out;
}

void subsets_of_size(const std::vector<std::string>& pool, std::size_t k,
                     std::vector<std::vector<std::string>>& out) {
    if (k == 0 || k > pool.size()) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::vector<std::string> s;
        for (auto i : idx) s.push_back(pool[i]);
        out.push_back(std::move(s));
        std::size_t pos = k;
        bool advanced = false;
        while (pos-- > 0) {
            if (idx[pos] + (k - pos) < pool.size()) {
                ++idx[pos];
                for (std::size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

RateRegime parse_regime(const std::string& s) {
    if (s == "secrecy-robustness") return RateRegime::SecrecyRobustness;
    if (s == "secrecy-only") return RateRegime::SecrecyOnly;
    if (s == "robustness-only") return RateRegime::RobustnessOnly;
    throw Error("unknown regime '" + s + "'");
}

int cmd_transfer(const std::string& path, const std::string& format) {
    NetworkSpec spec = parse_network_file(path);
    TransferModel m = compile_model(spec);
    if (format == "csv") {
        std::printf("param,value\nm0,%d\nm1,%d\nm2,%d\nm3,%d\nm4,%d\nm5,%d\nm6,%d\nm7,%d\n",
                    m.m0, m.m1, m.m2, m.m3, m.m4, m.m5, m.m6, spec.m7());
        print_matrix_csv("K_B", m.K_B);
        print_matrix_csv("K_E", m.K_E);
        if (m.kind != ModelKind::Passive) {
            print_matrix_csv("H_B", m.H_B);
            print_matrix_csv("H_E", m.H_E);
        }
        return kExitOk;
    }
    const char* kind = m.kind == ModelKind::Passive    ? "passive"
                       : m.kind == ModelKind::Addition ? "addition"
                                                       : "replacement";
    std::printf("model: %s over an alphabet of size %" PRIu64 "\n", kind, spec.ctx.size());
    std::printf("dimensions: m0=%d m1=%d m2=%d m3=%d m4=%d m5=%d m6=%d m7=%d\n", m.m0, m.m1,
                m.m2, m.m3, m.m4, m.m5, m.m6, spec.m7());
    print_matrix("K_B", m.K_B);
    print_matrix("K_E", m.K_E);
    if (m.kind != ModelKind::Passive) {
        print_matrix("H_B", m.H_B);
        print_matrix("H_E", m.H_E);
    }
    return kExitOk;
}

struct LoadedRun {
    NetworkSpec spec;
    TransferModel model;
    Channel channel;
    Code code;
    Strategy strategy;
};

LoadedRun load_run(const std::string& spec_path, const std::string& code_path,
                   const std::string& strategy_path, int n, std::uint64_t message_count) {
    LoadedRun run;
    run.spec = parse_network_file(spec_path);
    run.model = compile_model(run.spec);
    if (run.model.kind == ModelKind::Replacement)
        run.channel = linear_channel_with_baseline(run.model, compile_passive(run.spec), n);
    else
        run.channel = linear_channel(run.model, n);
    if (code_path.empty()) {
        std::uint64_t mc = message_count == 0 ? run.spec.ctx.size() : message_count;
        run.code = identity_code(run.spec.ctx, run.model.m3, n, mc);
    } else {
        run.code = parse_code_file(read_file(code_path), run.spec.ctx, run.model.m3, n);
    }
    if (strategy_path.empty())
        run.strategy = Strategy::zero();
    else
        run.strategy = parse_strategy(read_file(strategy_path), run.spec.ctx, run.model.m5,
                                      run.model.m6);
    return run;
}

int cmd_attack_sim(const std::string& spec_path, const std::string& code_path,
                   const std::string& strategy_path, int n, std::uint64_t message_count,
                   std::uint64_t budget, const std::string& format) {
    LoadedRun run = load_run(spec_path, code_path, strategy_path, n, message_count);
    JointDist passive = run_passive(run.code, run.channel, budget);
    double ip = mutual_info(passive, {"M"}, {"YE"}).value;
    Rational d1p = l1_security(passive, "M", {"YE"});
    double ia = ip;
    if (run.model.m5 > 0) {
        JointDist active = run_active(run.code, run.channel, run.strategy, budget);
        ia = mutual_info(active, {"M"}, {"YE", "Z"}).value;
    }
    if (format == "csv") {
        std::printf("measure,value\npassive_bits,%s\nactive_bits,%s\npassive_l1,%s\n",
                    fmt_double(ip).c_str(), fmt_double(ia).c_str(), d1p.str().c_str());
    } else {
        std::printf("passive leakage I(M;YE) = %s bits\n", fmt_double(ip).c_str());
        std::printf("active  leakage I(M;YE,Z) = %s bits\n", fmt_double(ia).c_str());
        std::printf("passive l1 distance d1(M|YE) = %s\n", d1p.str().c_str());
    }
    return kExitOk;
}

int cmd_reduction(const std::string& spec_path, const std::string& code_path,
                  const std::string& strategy_path, const std::string& onehop_mode,
                  const std::string& onehop_attack, int n, std::uint64_t message_count,
                  std::uint64_t budget) {
    ReductionResult res;
    if (!onehop_mode.empty()) {
        if (onehop_mode != "binary") throw Error("only the binary one-hop demo is built in");
        OneHopCode oh = binary_counterexample();
        int observe_edge = onehop_attack == "ii" ? 4 : 3;
        std::uint32_t constant = onehop_attack == "ii" ? 0u : 1u;
        Channel ch = onehop_channel(oh, 1, observe_edge);
        Strategy st = replacement_strategy(oh.zd, {constant, constant});
        res = reduction_check(onehop_code_adapter(oh), ch, st, budget);
    } else {
        LoadedRun run = load_run(spec_path, code_path, strategy_path, n, message_count);
        res = reduction_check(run.code, run.channel, run.strategy, budget);
    }
    const char* verdict = res.verdict == ReductionVerdict::Equivalent   ? "equivalent"
                          : res.verdict == ReductionVerdict::Leakier   ? "leakier"
                                                                        : "inconclusive";
    std::printf("reduction check (active view vs passive view): %s\n", verdict);
    std::printf("I(M;YE) passive = %s bits, active = %s bits\n",
                fmt_double(res.info_passive_bits).c_str(),
                fmt_double(res.info_active_bits).c_str());
    if (!res.witness.empty()) std::printf("witness: %s\n", res.witness.c_str());
    return res.verdict == ReductionVerdict::Leakier ? kExitFinding : kExitOk;
}

int cmd_hash_code(int k, int kbar, const std::string& seed_hex, bool audit,
                  const std::vector<std::string>& family_files,
                  const std::string& family_shape, std::uint64_t q, int m3, int n) {
    ArithCtx f = ArithCtx::prime_field(q);
    if (audit) {
        Universal2Audit a = universal2_audit(f, k, kbar);
        std::printf("pairwise collision audit: max %s, bound %s: %s\n",
                    a.max_collision.str().c_str(), a.bound.str().c_str(),
                    a.ok ? "ok" : "VIOLATED");
        if (!a.ok) return kExitFinding;
    }
    if (!seed_hex.empty()) {
        std::vector<std::uint32_t> seed;
        for (char c : seed_hex) {
            std::uint32_t v;
            if (c >= '0' && c <= '9') v = (std::uint32_t)(c - '0');
            else if (c >= 'a' && c <= 'f') v = (std::uint32_t)(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') v = (std::uint32_t)(c - 'A' + 10);
            else throw Error("seed must be hex");
            for (int b = 3; b >= 0; --b) seed.push_back((v >> b) & 1);
        }
        seed.resize((std::size_t)(k - 1), 0);
        ToeplitzHash h = make_toeplitz(f, seed, k, kbar);
        print_matrix("hash [I | T]", h.matrix());
    }
    std::vector<Mat> family;
    for (const auto& path : family_files) {
        NetworkSpec spec = parse_network_file(path);
        TransferModel m = compile_model(spec);
        family.push_back(m.K_E);
    }
    if (!family_shape.empty()) {
        int rows, cols, rank;
        if (std::sscanf(family_shape.c_str(), "%dx%d:%d", &rows, &cols, &rank) != 3)
            throw Error("family shape must look like ROWSxCOLS:RANK");
        auto fam = enumerate_rank_matrices(f, rows, cols, rank);
        family.insert(family.end(), fam.begin(), fam.end());
    }
    if (!family.empty()) {
        SeedSearchResult res = seed_search(f, k, kbar, m3, n, family);
        if (res.zero_leak_found) {
            std::printf("zero-leak seed found after scanning %" PRIu64 " seed(s):",
                        res.seeds_scanned);
            for (auto s : res.seed) std::printf(" %u", s);
            std::printf("\n");
        } else {
            std::printf("no zero-leak seed; minimum leak %d symbol(s), adversary #%d\n",
                        res.min_leak_dims, res.witness_family_index);
            return kExitFinding;
        }
    }
    return kExitOk;
}

int cmd_robust_sim(std::uint64_t q, int n, int m0, int m1, int m3, int m4,
                   std::uint64_t trials, std::uint64_t seed) {
    ArithCtx f = q == 65536 ? ArithCtx::extension_field(2, 16) : ArithCtx::prime_field(q);
    double nm = std::pow((double)n, (double)m0 + 1);
    if (nm * 16 > (double)f.size())
        std::fprintf(stderr, "note: field size %" PRIu64 " is not far above n^(m0+1) = %s\n",
                     f.size(), fmt_double(nm).c_str());
    std::printf("trial,f1_prime,f1_dprime,f2,success\n");
    std::uint64_t failures = 0, condition_misses = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::stream(seed, t);
        RobustCode code = make_robust_code(f, m0, m1, m3, m4, n, rng);
        Mat k_b = random_full_rank_matrix(f, m4, m3, m0, rng);
        Mat h_hat = random_matrix(f, m4, m1, rng);
        Mat z_hat = random_full_rank_matrix(f, m1, n, m1, rng);
        Mat msg = random_matrix(f, m0 - m1, n, rng);
        RobustEncoding enc = robust_encode(code, msg);
        Mat y = mat_add(mat_mul(k_b, enc.channel_input), mat_mul(h_hat, z_hat));
        DecodeTrace trace = robust_decode(code, y, enc.header);
        ConditionFlags flags = check_conditions(code, k_b, h_hat, msg, z_hat);
        bool ok = trace.solved && trace.decoded == msg;
        if (!ok) ++failures;
        if (flags.all() && !ok) ++condition_misses;
        std::printf("%" PRIu64 ",%d,%d,%d,%d\n", t, (int)flags.f1_prime, (int)flags.f1_dprime,
                    (int)flags.f2, (int)ok);
    }
    double bound = nm / (double)f.size();
    std::fprintf(stderr, "failures %" PRIu64 "/%" PRIu64 " (dominant bound %s)\n", failures,
                 trials, fmt_double(bound).c_str());
    return condition_misses == 0 ? kExitOk : kExitModel;
}

int cmd_onehop_demo() {
    OneHopCode c = binary_counterexample();
    LeakageProfile prof = leakage_profile(c);
    std::printf("binary relay tables:\n");
    std::printf("  phi3 = [[%u,%u],[%u,%u]]\n", c.relay3[0][0], c.relay3[0][1], c.relay3[1][0],
                c.relay3[1][1]);
    std::printf("  phi4 = [[%u,%u],[%u,%u]]\n", c.relay4[0][0], c.relay4[0][1], c.relay4[1][0],
                c.relay4[1][1]);
    const char* names[2][2] = {{"(Y1,Y3)", "(Y1,Y4)"}, {"(Y2,Y3)", "(Y2,Y4)"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            std::printf("passive %s: I = %s bits, d1 = %s\n", names[i][j],
                        fmt_double(prof.mi_bits[i][j]).c_str(), prof.d1[i][j].str().c_str());
    for (const char* attack : {"i", "ii"}) {
        bool second = attack[1] != '\0';
        Channel ch = onehop_channel(c, 1, second ? 4 : 3);
        Strategy st = replacement_strategy(
            c.zd, second ? std::vector<std::uint32_t>{0, 0} : std::vector<std::uint32_t>{1, 1});
        JointDist d = run_active(onehop_code_adapter(c), ch, st);
        std::printf("active attack (%s): I(M;view) = %s bits\n", attack,
                    fmt_double(mutual_info(d, {"M"}, {"YE"}).value).c_str());
    }
    return kExitOk;
}

int cmd_onehop_construct(std::uint64_t d) {
    auto pair = d % 2 == 1 ? construct_odd(d) : construct_even(d);
    ALSVerdict v = verify_pair(pair.first, pair.second, d);
    auto dump = [&](const RelayTable& t) {
        for (const auto& row : t) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::printf(j == 0 ? "%u" : " %u", row[j]);
            std::printf("\n");
        }
    };
    dump(pair.first);
    std::printf("\n");
    dump(pair.second);
    std::printf("# decodable: %s\n", v.decodable ? "yes" : "no");
    LeakageProfile prof = leakage_profile(make_standard_code(d, pair.first, pair.second));
    std::printf("# I(M;Y1,Y3) = %s bits (closed-form gap %s)\n",
                fmt_double(prof.mi_bits[0][0]).c_str(), fmt_double(prof.max_abs_gap).c_str());
    return v.decodable ? kExitOk : kExitFinding;
}

int cmd_onehop_verify(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream probe(text);
    std::string line;
    std::uint64_t d = 0;
    while (std::getline(probe, line)) {
        std::istringstream ls(line.substr(0, line.find('#')));
        std::vector<std::string> toks{std::istream_iterator<std::string>(ls), {}};
        if (!toks.empty()) {
            d = toks.size();
            break;
        }
    }
    if (d == 0) throw Error("pair file is empty");
    std::istringstream in(text);
    int lineno = 0;
    RelayTable t3 = read_grid(in, d, lineno);
    RelayTable t4 = read_grid(in, d, lineno);
    ALSVerdict v = verify_pair(t3, t4, d);
    std::printf("first table anti-Latin: %s\n", v.anti_latin_3 ? "yes" : "no");
    std::printf("second table anti-Latin: %s\n", v.anti_latin_4 ? "yes" : "no");
    std::printf("offset fibers disjoint: %s\n", v.fibers_disjoint ? "yes" : "no");
    std::printf("decodable pair: %s\n", v.decodable ? "yes" : "no");
    if (!v.witness.empty()) std::printf("witness: %s\n", v.witness.c_str());
    return v.decodable ? kExitOk : kExitFinding;
}

int cmd_onehop_search(std::uint64_t d, std::uint64_t budget, int jobs) {
    auto pairs = search_pairs(d, budget, jobs);
    std::printf("decodable pairs with first cell pinned to zero: %zu\n", pairs.size());
    if (!pairs.empty()) {
        std::printf("first pair found:\n");
        for (const auto& row : pairs[0].first) {
            for (auto v : row) std::printf(" %u", v);
            std::printf("\n");
        }
        std::printf("\n");
        for (const auto& row : pairs[0].second) {
            for (auto v : row) std::printf(" %u", v);
            std::printf("\n");
        }
    }
    return kExitOk;
}

int cmd_onehop_audit() {
    RelayAudit audit = classify_binary_relays();
    std::printf("decodable, two-observation-secret binary relays: %d\n", audit.survivor_count);
    std::printf("relabeling orbit size of the canonical relay: %d\n", audit.orbit_size);
    std::printf("all survivors inside the orbit: %s\n",
                audit.all_survivors_in_orbit ? "yes" : "no");
    return audit.all_survivors_in_orbit ? kExitOk : kExitFinding;
}

int cmd_onehop_randomized() {
    RandomizedRelayReport rep = randomized_relay_demo();
    std::printf("decoder recovers M: %s\n", rep.decoder_ok ? "yes" : "no");
    const char* names[2][2] = {{"(Y1,Y3)", "(Y1,Y4)"}, {"(Y2,Y3)", "(Y2,Y4)"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            std::printf("passive %s: I = %s bits\n", names[i][j],
                        fmt_double(rep.passive_mi_bits[i][j]).c_str());
    std::printf("best replacement-attack recovery probability: %s\n",
                rep.max_active_recovery.str().c_str());
    return kExitOk;
}

int cmd_qkd_rate(const std::string& spec_path, const std::vector<std::string>& occupied,
                 const std::string& regime_name, int worst_case) {
    NetworkSpec spec = parse_network_file(spec_path);
    TransferModel base = compile_passive(spec);
    RateRegime regime = parse_regime(regime_name);
    int worst_m1 = 0, worst_m2 = 0;
    if (worst_case > 0) {
        std::vector<std::vector<std::string>> sets;
        subsets_of_size(intermediate_nodes(spec), (std::size_t)worst_case, sets);
        if (sets.empty()) throw Error("no occupied-node sets of that size");
        std::printf("nodes,rank_KE,rank_HB\n");
        for (const auto& s : sets) {
            NodeAdversary adv = nodes_to_edges(spec, s);
            if (adv.edges.empty()) continue;
            TransferModel m = compile_addition(adv.spec);
            std::string label;
            for (const auto& node : s) label += (label.empty() ? "" : "+") + node;
            std::printf("%s,%d,%d\n", label.c_str(), m.m2, m.m1);
            worst_m1 = std::max(worst_m1, m.m1);
            worst_m2 = std::max(worst_m2, m.m2);
        }
    } else {
        NodeAdversary adv = nodes_to_edges(spec, occupied);
        if (!adv.edges.empty()) {
            TransferModel m = compile_addition(adv.spec);
            worst_m1 = m.m1;
            worst_m2 = m.m2;
        }
        std::printf("rank_KE,rank_HB\n%d,%d\n", worst_m2, worst_m1);
    }
    RateReport rep = rate_report(base.m0, worst_m1, worst_m2, regime);
    std::printf("m0=%d worst_m1=%d worst_m2=%d\n", base.m0, worst_m1, worst_m2);
    if (rep.guaranteed)
        std::printf("achievable rate (%s): %d symbols per use\n", regime_name.c_str(),
                    rep.rate);
    else
        std::printf("achievable rate (%s): not guaranteed\n", regime_name.c_str());
    return kExitOk;
}

int cmd_multicast(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;
    MulticastTable table;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line.substr(0, line.find('#')));
        std::vector<std::string> toks{std::istream_iterator<std::string>(ls), {}};
        if (toks.empty()) continue;
        if (toks[0] == "senders" && toks.size() == 2) {
            table.senders = std::stoi(toks[1]);
        } else if (toks[0] == "receivers") {
            for (std::size_t i = 1; i < toks.size(); ++i)
                table.receivers.push_back(std::stoi(toks[i]));
        } else if (toks[0] == "direct" && toks.size() == 4) {
            table.rank_direct[{std::stoi(toks[1]), std::stoi(toks[2])}] = std::stoi(toks[3]);
        } else if (toks[0] == "cross" && toks.size() == 4) {
            table.rank_cross[{std::stoi(toks[1]), std::stoi(toks[2])}] = std::stoi(toks[3]);
        } else if (toks[0] == "leak" && toks.size() == 5) {
            table.rank_leak[{std::stoi(toks[1]), std::stoi(toks[2]), std::stoi(toks[3])}] =
                std::stoi(toks[4]);
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    auto params = multicast_params(table);
    std::printf("sender,m0,m1,m2,secrecy_robustness_rate,secrecy_only_rate\n");
    for (std::size_t i = 0; i < params.size(); ++i) {
        RateReport sr = rate_report(params[i].m0, params[i].m1, params[i].m2,
                                    RateRegime::SecrecyRobustness);
        RateReport so =
            rate_report(params[i].m0, params[i].m1, params[i].m2, RateRegime::SecrecyOnly);
        std::string srs = sr.guaranteed ? std::to_string(sr.rate) : "not-guaranteed";
        std::string sos = so.guaranteed ? std::to_string(so.rate) : "not-guaranteed";
        std::printf("%zu,%d,%d,%d,%s,%s\n", i + 1, params[i].m0, params[i].m1, params[i].m2,
                    srs.c_str(), sos.c_str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secure network coding toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = env_seed(0x5ec0de);
    std::string format = "text";
    int jobs = 1;
    std::uint64_t budget = 1u << 24;
    app.add_option("--seed", seed, "master seed (SECNET_SEED overrides the default)");
    app.add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--jobs", jobs, "worker threads for searches")->check(CLI::PositiveNumber);
    app.add_option("--budget", budget, "enumeration budget");

    std::string spec_path, code_path, strategy_path, pair_path, table_path;
    std::string onehop_mode, onehop_attack = "i", regime = "secrecy-only";
    std::string seed_hex, family_shape;
    std::vector<std::string> family_files, occupied;
    int n = 1, k = 8, kbar = 3, m0 = 3, m1 = 1, m3 = 4, m4 = 4, worst_case = 0;
    std::uint64_t hash_q = 2, q = 65521, trials = 1000, message_count = 0, d = 3;
    bool audit = false;

    CLI::App* transfer = app.add_subcommand("transfer", "compile a network description");
    transfer->add_option("spec", spec_path, "network description file")->required();

    CLI::App* attack = app.add_subcommand("attack-sim", "exact leakage of a code on a network");
    attack->add_option("spec", spec_path)->required();
    attack->add_option("--code", code_path, "code table file (default: identity code)");
    attack->add_option("--strategy", strategy_path, "strategy file (default: zero)");
    attack->add_option("--n", n, "transmissions");
    attack->add_option("--messages", message_count, "message count for the default code");

    CLI::App* reduction = app.add_subcommand("reduction", "active-vs-passive view comparison");
    reduction->add_option("spec", spec_path);
    reduction->add_option("--code", code_path);
    reduction->add_option("--strategy", strategy_path);
    reduction->add_option("--n", n);
    reduction->add_option("--messages", message_count);
    reduction->add_option("--onehop", onehop_mode, "run the built-in non-linear relay demo");
    reduction->add_option("--attack", onehop_attack, "one-hop attack variant: i or ii")
        ->check(CLI::IsMember({"i", "ii"}));

    CLI::App* hash = app.add_subcommand("hash-code", "Toeplitz hashing and seed search");
    hash->add_option("--k", k, "input length")->required();
    hash->add_option("--kbar", kbar, "output length")->required();
    hash->add_option("--seed", seed_hex, "hex seed to materialize");
    hash->add_flag("--audit", audit, "exhaustive pairwise collision audit");
    hash->add_option("--family", family_files, "network files contributing eavesdropper matrices");
    hash->add_option("--family-shape", family_shape, "enumerate all ROWSxCOLS:RANK matrices");
    hash->add_option("--q", hash_q, "field size");
    hash->add_option("--m3", m3, "channel input dimension for the seed search");
    hash->add_option("--n", n, "transmissions for the seed search");

    CLI::App* robust = app.add_subcommand("robust-sim", "adversarial decoding Monte Carlo");
    robust->add_option("--q", q, "field size (65536 means GF(2^16))");
    robust->add_option("--n", n, "block length");
    robust->add_option("--m0", m0);
    robust->add_option("--m1", m1);
    robust->add_option("--m3", m3);
    robust->add_option("--m4", m4);
    robust->add_option("--trials", trials);

    CLI::App* onehop = app.add_subcommand("onehop", "one-hop relay analysis");
    onehop->require_subcommand(1);
    CLI::App* oh_demo = onehop->add_subcommand("demo-binary", "the binary relay and its attacks");
    CLI::App* oh_con = onehop->add_subcommand("construct", "systematic table pair");
    oh_con->add_option("--d", d, "alphabet size")->required();
    CLI::App* oh_ver = onehop->add_subcommand("verify", "check a table pair file");
    oh_ver->add_option("--file", pair_path)->required();
    std::uint64_t search_budget = (std::uint64_t)512 << 20;
    CLI::App* oh_sea = onehop->add_subcommand("search", "exhaustive decodable-pair search");
    oh_sea->add_option("--d", d)->required();
    oh_sea->add_option("--budget", search_budget, "pair-space cap for the search");
    CLI::App* oh_aud = onehop->add_subcommand("audit-t6", "classify all binary relays");
    CLI::App* oh_rand = onehop->add_subcommand("randomized-demo", "relay with private scramble");

    CLI::App* qkd = app.add_subcommand("qkd-rate", "key rates under occupied nodes");
    qkd->add_option("spec", spec_path)->required();
    qkd->add_option("--occupied", occupied, "occupied node names");
    qkd->add_option("--regime", regime,
                    "secrecy-robustness | secrecy-only | robustness-only");
    qkd->add_option("--worst-case", worst_case, "scan all occupied sets of this size");

    CLI::App* multicast = app.add_subcommand("multicast", "per-sender parameter folding");
    multicast->add_option("table", table_path, "rank table file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*transfer) return cmd_transfer(spec_path, format);
        if (*attack)
            return cmd_attack_sim(spec_path, code_path, strategy_path, n, message_count,
                                  budget, format);
        if (*reduction)
            return cmd_reduction(spec_path, code_path, strategy_path, onehop_mode,
                                 onehop_attack, n, message_count, budget);
        if (*hash)
            return cmd_hash_code(k, kbar, seed_hex, audit, family_files, family_shape,
                                 hash_q, m3, n);
        if (*robust) return cmd_robust_sim(q, n, m0, m1, m3, m4, trials, seed);
        if (*onehop) {
            if (*oh_demo) return cmd_onehop_demo();
            if (*oh_con) return cmd_onehop_construct(d);
            if (*oh_ver) return cmd_onehop_verify(pair_path);
            if (*oh_sea) return cmd_onehop_search(d, search_budget, jobs);
            if (*oh_aud) return cmd_onehop_audit();
            if (*oh_rand) return cmd_onehop_randomized();
        }
        if (*qkd) return cmd_qkd_rate(spec_path, occupied, regime, worst_case);
        if (*multicast) return cmd_multicast(table_path);
    } catch (const UniquenessError& e) {
        std::fprintf(stderr, "model violation: %s\n", e.what());
        return kExitModel;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kExitInput;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitOk;
}
