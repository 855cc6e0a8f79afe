#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <secnet/infoleak.hpp>
#include <secnet/onehop.hpp>

#include <cmath>
#include <set>

using namespace secnet;

namespace {

// fixed pairs as printed
const RelayTable kEx1a = {{1, 0, 0}, {0, 0, 2}, {1, 2, 2}};
const RelayTable kEx1b = {{1, 0, 1}, {1, 2, 1}, {0, 2, 0}};
const RelayTable kEx2a = {{1, 0, 3, 3}, {0, 0, 2, 3}, {1, 1, 3, 2}, {0, 2, 2, 1}};
const RelayTable kEx2b = {{2, 2, 1, 0}, {0, 3, 3, 1}, {0, 3, 3, 0}, {1, 1, 2, 2}};
const RelayTable kEx3a = {{0, 1, 0}, {1, 1, 2}, {0, 2, 2}};
const RelayTable kEx3b = {{0, 2, 2}, {0, 1, 0}, {1, 1, 2}};
const RelayTable kEx4a = {{0, 1, 3, 3}, {0, 1, 2, 0}, {1, 1, 2, 3}, {0, 2, 2, 3}};
const RelayTable kEx4b = {{0, 0, 1, 0}, {1, 1, 1, 2}, {3, 2, 2, 2}, {3, 0, 3, 3}};
const RelayTable kEx5a = {{0, 1, 2, 0, 0},
                          {1, 1, 2, 3, 1},
                          {2, 2, 2, 3, 4},
                          {0, 3, 3, 3, 4},
                          {0, 1, 4, 4, 4}};
const RelayTable kEx5b = {{0, 3, 3, 3, 4},
                          {0, 1, 4, 4, 4},
                          {0, 1, 2, 0, 0},
                          {1, 1, 2, 3, 1},
                          {2, 2, 2, 3, 4}};
const RelayTable kEx6a = {{0, 1, 2, 5, 5, 5}, {0, 1, 2, 3, 0, 0}, {1, 1, 2, 3, 4, 1},
                          {2, 2, 2, 3, 4, 5}, {0, 3, 3, 3, 4, 5}, {0, 1, 4, 4, 4, 5}};
const RelayTable kEx6b = {{1, 1, 1, 2, 3, 1}, {2, 2, 2, 2, 3, 4}, {5, 3, 3, 3, 3, 4},
                          {5, 0, 4, 4, 4, 4}, {5, 0, 1, 5, 5, 5}, {0, 0, 1, 2, 0, 0}};
const RelayTable kEx7a = {{0, 1, 2, 3, 0, 0, 0}, {1, 1, 2, 3, 4, 1, 1},
                          {2, 2, 2, 3, 4, 5, 2}, {3, 3, 3, 3, 4, 5, 6},
                          {0, 4, 4, 4, 4, 5, 6}, {0, 1, 5, 5, 5, 5, 6},
                          {0, 1, 2, 6, 6, 6, 6}};
const RelayTable kEx7b = {{0, 4, 4, 4, 4, 5, 6}, {0, 1, 5, 5, 5, 5, 6},
                          {0, 1, 2, 6, 6, 6, 6}, {0, 1, 2, 3, 0, 0, 0},
                          {1, 1, 2, 3, 4, 1, 1}, {2, 2, 2, 3, 4, 5, 2},
                          {3, 3, 3, 3, 4, 5, 6}};
const RelayTable kEx8a = {{0, 1, 2, 3, 7, 7, 7, 7}, {0, 1, 2, 3, 4, 0, 0, 0},
                          {1, 1, 2, 3, 4, 5, 1, 1}, {2, 2, 2, 3, 4, 5, 6, 2},
                          {3, 3, 3, 3, 4, 5, 6, 7}, {0, 4, 4, 4, 4, 5, 6, 7},
                          {0, 1, 5, 5, 5, 5, 6, 7}, {0, 1, 2, 6, 6, 6, 6, 7}};
const RelayTable kEx8b = {{2, 2, 2, 2, 3, 4, 5, 2}, {3, 3, 3, 3, 3, 4, 5, 6},
                          {7, 4, 4, 4, 4, 4, 5, 6}, {7, 0, 5, 5, 5, 5, 5, 6},
                          {7, 0, 1, 6, 6, 6, 6, 6}, {7, 0, 1, 2, 7, 7, 7, 7},
                          {0, 0, 1, 2, 3, 0, 0, 0}, {1, 1, 1, 2, 3, 4, 1, 1}};

}  // namespace

TEST_CASE("binary counterexample decodes for every input") {
    OneHopCode c = binary_counterexample();
    for (std::uint32_t m = 0; m < 2; ++m)
        for (std::uint32_t l = 0; l < 2; ++l) {
            auto [y1, y2] = c.encode(m, l);
            auto [y3, y4] = c.relay(y1, y2);
            CHECK((y3 + y4) % 2 == m);
        }
    JointDist d = onehop_passive_dist(c);
    const char* e[4] = {"Y1", "Y2", "Y3", "Y4"};
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j) {
            CHECK(mutual_info(d, {"M"}, {e[i], e[j]}).value == doctest::Approx(0.5));
            CHECK(l1_security(d, "M", {e[i], e[j]}) == Rational(1, 2));
        }
}

TEST_CASE("printed pairs are decodable") {
    CHECK(verify_pair(kEx1a, kEx1b, 3).decodable);
    CHECK(verify_pair(kEx2a, kEx2b, 4).decodable);
    CHECK(verify_pair(kEx3a, kEx3b, 3).decodable);
    CHECK(verify_pair(kEx4a, kEx4b, 4).decodable);
    CHECK(verify_pair(kEx5a, kEx5b, 5).decodable);
    CHECK(verify_pair(kEx6a, kEx6b, 6).decodable);
    CHECK(verify_pair(kEx7a, kEx7b, 7).decodable);
    CHECK(verify_pair(kEx8a, kEx8b, 8).decodable);
}

TEST_CASE("Latin squares are rejected") {
    RelayTable latin = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};  // addition table of Z3
    ALSVerdict v = verify_pair(latin, kEx1b, 3);
    CHECK_FALSE(v.anti_latin_3);
    CHECK_FALSE(v.decodable);
    CHECK_FALSE(v.witness.empty());
}

TEST_CASE("no binary pair is decodable") {
    int decodable = 0;
    for (std::uint32_t c3 = 0; c3 < 16; ++c3)
        for (std::uint32_t c4 = 0; c4 < 16; ++c4) {
            RelayTable t3 = {{c3 & 1, (c3 >> 1) & 1}, {(c3 >> 2) & 1, (c3 >> 3) & 1}};
            RelayTable t4 = {{c4 & 1, (c4 >> 1) & 1}, {(c4 >> 2) & 1, (c4 >> 3) & 1}};
            if (verify_pair(t3, t4, 2).decodable) ++decodable;
        }
    CHECK(decodable == 0);
}

TEST_CASE("systematic constructions reproduce the printed tables") {
    auto odd3 = construct_odd(3);
    CHECK(odd3.first == kEx3a);
    CHECK(odd3.second == kEx3b);
    auto even4 = construct_even(4);
    CHECK(even4.first == kEx4a);
    CHECK(even4.second == kEx4b);
    auto odd5 = construct_odd(5);
    CHECK(odd5.first == kEx5a);
    CHECK(odd5.second == kEx5b);
    auto even6 = construct_even(6);
    CHECK(even6.first == kEx6a);
    CHECK(even6.second == kEx6b);
    auto odd7 = construct_odd(7);
    CHECK(odd7.first == kEx7a);
    CHECK(odd7.second == kEx7b);
    auto even8 = construct_even(8);
    CHECK(even8.first == kEx8a);
    CHECK(even8.second == kEx8b);
    CHECK_THROWS_AS(construct_odd(4), Error);
    CHECK_THROWS_AS(construct_even(5), Error);
    CHECK_THROWS_AS(construct_even(2), Error);
}

TEST_CASE("constructions are decodable and recover the scramble as well") {
    for (std::uint64_t d = 3; d <= 12; ++d) {
        auto pair = d % 2 == 1 ? construct_odd(d) : construct_even(d);
        CHECK(verify_pair(pair.first, pair.second, d).decodable);
        // joint (M, L) recovery: the relay output determines the input pair
        std::set<std::pair<std::uint32_t, std::uint32_t>> images;
        OneHopCode code = make_standard_code(d, pair.first, pair.second);
        for (std::uint32_t m = 0; m < d; ++m)
            for (std::uint32_t l = 0; l < d; ++l) {
                auto [y1, y2] = code.encode(m, l);
                images.insert(code.relay(y1, y2));
            }
        CHECK(images.size() == d * d);
        // and the offset decoder returns the message
        for (std::uint32_t m = 0; m < d; ++m)
            for (std::uint32_t l = 0; l < d; ++l) {
                auto [y1, y2] = code.encode(m, l);
                auto [y3, y4] = code.relay(y1, y2);
                auto dec = onehop_decode(code, y3, y4);
                REQUIRE(dec.has_value());
                CHECK(*dec == m);
            }
    }
}

TEST_CASE("binary search space is empty") {
    auto pairs = search_pairs(2, 1u << 20);
    CHECK(pairs.empty());
    CHECK_THROWS_AS(search_pairs(2, 0), BudgetError);
    CHECK_THROWS_AS(search_pairs(5, 1u << 20), Error);
}

TEST_CASE("ternary search finds the printed pair up to output relabeling") {
    auto pairs = search_pairs(3, 200u << 20);
    CHECK_FALSE(pairs.empty());
    std::set<std::pair<RelayTable, RelayTable>> found(pairs.begin(), pairs.end());
    // relabel outputs of the printed pair so t3[0][0] = 0 and look it up
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::uint32_t> p = {0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    bool hit = false;
    for (const auto& f3 : perms) {
        if (f3[kEx1a[0][0]] != 0) continue;
        for (const auto& f4 : perms) {
            RelayTable a(3, std::vector<std::uint32_t>(3)), b = a;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    a[i][j] = f3[kEx1a[i][j]];
                    b[i][j] = f4[kEx1b[i][j]];
                }
            if (found.count({a, b})) hit = true;
        }
    }
    CHECK(hit);
    // every reported pair is decodable, and the search is partition-invariant
    for (const auto& [a, b] : pairs) CHECK(verify_pair(a, b, 3).decodable);
    auto pairs2 = search_pairs(3, 200u << 20, 2);
    CHECK(pairs2 == pairs);
}

TEST_CASE("leakage profile matches the closed forms") {
    for (std::uint64_t d : {3ull, 5ull, 7ull}) {
        auto pair = construct_odd(d);
        LeakageProfile prof = leakage_profile(make_standard_code(d, pair.first, pair.second));
        CHECK(prof.closed == LeakageProfile::Closed::Odd);
        CHECK(prof.max_abs_gap < 1e-9);
    }
    for (std::uint64_t d : {4ull, 6ull, 8ull}) {
        auto pair = construct_even(d);
        LeakageProfile prof = leakage_profile(make_standard_code(d, pair.first, pair.second));
        CHECK(prof.closed == LeakageProfile::Closed::Even);
        CHECK(prof.max_abs_gap < 1e-9);
    }
    // the even aligned pairs: 1/2 log 2 + 1/2 log d = 3/2 bits at d = 4
    CHECK(onehop_even_leak_aligned_bits(4) == doctest::Approx(1.5));
}

TEST_CASE("relay-map audit pins down the binary counterexample") {
    RelayAudit audit = classify_binary_relays();
    CHECK(audit.survivor_count > 0);
    CHECK(audit.all_survivors_in_orbit);
    CHECK(audit.orbit_size <= 16);
    // the counterexample's own relay survives
    OneHopCode c = binary_counterexample();
    bool present = false;
    for (const auto& [t3, t4] : audit.survivors)
        if (t3 == c.relay3 && t4 == c.relay4) present = true;
    CHECK(present);
    // the identity relay leaks linearly and must not survive
    RelayTable id3 = {{0, 0}, {1, 1}}, id4 = {{0, 1}, {0, 1}};  // Y3 = Y1, Y4 = Y2
    for (const auto& [t3, t4] : audit.survivors) CHECK(!(t3 == id3 && t4 == id4));
}

TEST_CASE("information floor for decodable relays") {
    // I(M; Y_i Y_3) + I(M; Y_i Y_4) >= 2 H(M) - log d for every decodable code
    const char* e[2] = {"Y1", "Y2"};
    for (std::uint32_t c3 = 0; c3 < 16; ++c3)
        for (std::uint32_t c4 = 0; c4 < 16; ++c4) {
            RelayTable t3 = {{c3 & 1, (c3 >> 1) & 1}, {(c3 >> 2) & 1, (c3 >> 3) & 1}};
            RelayTable t4 = {{c4 & 1, (c4 >> 1) & 1}, {(c4 >> 2) & 1, (c4 >> 3) & 1}};
            OneHopCode code = make_standard_code(2, t3, t4);
            // decodability under the standard encoder
            std::map<std::pair<std::uint32_t, std::uint32_t>, std::set<std::uint32_t>> img;
            for (std::uint32_t m = 0; m < 2; ++m)
                for (std::uint32_t l = 0; l < 2; ++l) {
                    auto [y1, y2] = code.encode(m, l);
                    img[code.relay(y1, y2)].insert(m);
                }
            bool dec = true;
            for (auto& [k, ms] : img)
                if (ms.size() > 1) dec = false;
            if (!dec) continue;
            JointDist dist = onehop_passive_dist(code);
            double hm = entropy(dist, {"M"}).value;
            for (int i = 0; i < 2; ++i) {
                double lhs = mutual_info(dist, {"M"}, {e[i], "Y3"}).value +
                             mutual_info(dist, {"M"}, {e[i], "Y4"}).value;
                CHECK(lhs >= 2 * hm - 1.0 - 1e-9);
            }
        }
}

TEST_CASE("randomized relay hides the message even under replacement") {
    RandomizedRelayReport rep = randomized_relay_demo();
    CHECK(rep.decoder_ok);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(rep.passive_mi_bits[i][j]) < 1e-12);
    CHECK(rep.max_active_recovery == Rational(1, 2));
}

TEST_CASE("constructions resist constant replacement attacks") {
    for (std::uint64_t d : {3ull, 4ull, 5ull}) {
        auto pair = d % 2 == 1 ? construct_odd(d) : construct_even(d);
        OneHopCode code = make_standard_code(d, pair.first, pair.second);
        for (int attacked = 1; attacked <= 2; ++attacked)
            for (int observed = 3; observed <= 4; ++observed)
                for (std::uint32_t constant = 0; constant < d; ++constant) {
                    JointDist adist({VarSpec{"M", 1, d}, VarSpec{"R", 1, d},
                                     VarSpec{"O", 1, d}});
                    Rational p(1, (std::int64_t)(d * d));
                    for (std::uint32_t m = 0; m < d; ++m)
                        for (std::uint32_t l = 0; l < d; ++l) {
                            auto [y1, y2] = code.encode(m, l);
                            std::uint32_t read = attacked == 1 ? y1 : y2;
                            std::uint32_t in1 = attacked == 1 ? constant : y1;
                            std::uint32_t in2 = attacked == 2 ? constant : y2;
                            auto [y3, y4] = code.relay(in1, in2);
                            adist.add({m, read, observed == 3 ? y3 : y4}, p);
                        }
                    CHECK(max_recovery_probability(adist, "M", {"R", "O"}) < Rational(1));
                }
    }
}
