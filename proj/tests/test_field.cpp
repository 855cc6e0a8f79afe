#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <secnet/field.hpp>

#include <set>
#include <vector>

using namespace secnet;

TEST_CASE("prime field construction") {
    ArithCtx f2 = ArithCtx::prime_field(2);
    CHECK(f2.size() == 2);
    CHECK(f2.add(1, 1) == 0);
    CHECK(f2.mul(1, 1) == 1);
    CHECK_THROWS_AS(ArithCtx::prime_field(4), Error);
    CHECK_THROWS_AS(ArithCtx::prime_field(1), Error);
}

TEST_CASE("ring with zero divisors") {
    ArithCtx z4 = ArithCtx::ring(4);
    CHECK(z4.mul(2, 2) == 0);
    CHECK(z4.add(3, 3) == 2);
    CHECK_THROWS_AS(z4.inv(3), UnsupportedOperation);
    CHECK_THROWS_AS(ArithCtx::ring(1), Error);
}

TEST_CASE("make dispatch rejects degree zero") {
    CHECK_THROWS_AS(ArithCtx::make(CtxKind::ExtensionField, 2, 0), Error);
}

namespace {

// Independent composite sieve: mark every product of two lower-degree monic
// polynomials over GF(p), then the smallest unmarked monic of degree t is the
// smallest irreducible.
std::vector<std::uint32_t> sieve_smallest_irreducible(std::uint32_t p, std::uint32_t t) {
    auto encode = [&](const std::vector<std::uint32_t>& c) {
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
        return v;
    };
    auto decode = [&](std::uint64_t v, std::uint32_t len) {
        std::vector<std::uint32_t> c(len, 0);
        for (std::uint32_t i = 0; i < len; ++i) {
            c[i] = (std::uint32_t)(v % p);
            v /= p;
        }
        return c;
    };
    std::uint64_t count_t = 1;
    for (std::uint32_t i = 0; i < t; ++i) count_t *= p;
    std::set<std::uint64_t> composite;
    for (std::uint32_t da = 1; da < t; ++da) {
        std::uint32_t db = t - da;
        if (db < da) break;
        std::uint64_t na = 1, nb = 1;
        for (std::uint32_t i = 0; i < da; ++i) na *= p;
        for (std::uint32_t i = 0; i < db; ++i) nb *= p;
        for (std::uint64_t ca = 0; ca < na; ++ca) {
            auto a = decode(ca, da + 1);
            a[da] = 1;
            for (std::uint64_t cb = 0; cb < nb; ++cb) {
                auto b = decode(cb, db + 1);
                b[db] = 1;
                std::vector<std::uint32_t> prod(t + 1, 0);
                for (std::uint32_t i = 0; i <= da; ++i)
                    for (std::uint32_t j = 0; j <= db; ++j)
                        prod[i + j] = (std::uint32_t)((prod[i + j] + (std::uint64_t)a[i] * b[j]) % p);
                composite.insert(encode(prod));
            }
        }
    }
    for (std::uint64_t low = 0; low < count_t; ++low) {
        auto f = decode(low, t + 1);
        f[t] = 1;
        if (!composite.count(encode(f))) return f;
    }
    return {};
}

std::uint64_t poly_code(const std::vector<std::uint32_t>& c, std::uint32_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

}  // namespace

TEST_CASE("smallest irreducible octic over GF(2) found by independent sieve") {
    auto expected = sieve_smallest_irreducible(2, 8);
    ArithCtx f256 = ArithCtx::extension_field(2, 8);
    CHECK(f256.reduction_poly() == expected);
    // x^8 + x^4 + x^3 + x + 1
    CHECK(poly_code(f256.reduction_poly(), 2) == 0x11b);
}

TEST_CASE("small extension reduction polynomials match the sieve") {
    for (auto [p, t] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}}) {
        ArithCtx f = ArithCtx::extension_field(p, t);
        CHECK(f.reduction_poly() == sieve_smallest_irreducible(p, t));
    }
}

namespace {

// Plain polynomial arithmetic oracle for extension-field products.
std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                           const std::vector<std::uint32_t>& red) {
    std::uint32_t t = (std::uint32_t)red.size() - 1;
    std::vector<std::uint32_t> pa(t, 0), pb(t, 0);
    for (std::uint32_t i = 0; i < t; ++i) {
        pa[i] = a % p;
        a /= p;
        pb[i] = b % p;
        b /= p;
    }
    std::vector<std::uint32_t> prod(2 * t, 0);
    for (std::uint32_t i = 0; i < t; ++i)
        for (std::uint32_t j = 0; j < t; ++j)
            prod[i + j] = (std::uint32_t)((prod[i + j] + (std::uint64_t)pa[i] * pb[j]) % p);
    for (int d = 2 * (int)t - 2; d >= (int)t; --d) {
        std::uint32_t c = prod[(std::size_t)d];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= t; ++i) {
            std::uint64_t sub = ((std::uint64_t)c * red[i]) % p;
            std::size_t k = (std::size_t)d - t + i;
            prod[k] = (std::uint32_t)((prod[k] + p - sub) % p);
        }
    }
    std::uint32_t out = 0;
    for (std::size_t i = t; i-- > 0;) out = out * p + prod[i];
    return out;
}

}  // namespace

TEST_CASE("extension arithmetic agrees with polynomial arithmetic") {
    for (auto [p, t] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {3, 2}}) {
        ArithCtx f = ArithCtx::extension_field(p, t);
        for (std::uint32_t a = 0; a < f.size(); ++a)
            for (std::uint32_t b = 0; b < f.size(); ++b)
                CHECK(f.mul(a, b) == poly_mul_mod(a, b, p, f.reduction_poly()));
    }
}

TEST_CASE("every nonzero element has an inverse") {
    for (ArithCtx f : {ArithCtx::extension_field(2, 4), ArithCtx::extension_field(3, 2),
                       ArithCtx::prime_field(251), ArithCtx::prime_field(65521),
                       ArithCtx::extension_field(2, 16)}) {
        for (std::uint64_t a = 1; a < f.size(); ++a) {
            std::uint32_t inv = f.inv((std::uint32_t)a);
            CHECK(f.mul((std::uint32_t)a, inv) == 1);
        }
    }
}

TEST_CASE("pow matches repeated multiplication") {
    ArithCtx f = ArithCtx::extension_field(2, 8);
    std::uint32_t acc = 1;
    for (int e = 0; e < 40; ++e) {
        CHECK(f.pow(3, (std::uint64_t)e) == acc);
        acc = f.mul(acc, 3);
    }
}
