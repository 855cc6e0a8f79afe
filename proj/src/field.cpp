#include "secnet/field.hpp"

#include <algorithm>
#include <cmath>

namespace secnet {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

int poly_deg(const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (std::uint32_t)((r[i + j] + (std::uint64_t)a[i] * b[j]) % p);
    }
    return r;
}

std::uint64_t mod_inv_prime(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, newt = 1;
    std::int64_t r = (std::int64_t)p, newr = (std::int64_t)(a % p);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw Error("element has no inverse");
    if (t < 0) t += (std::int64_t)p;
    return (std::uint64_t)t;
}

// a mod b, b monic-normalizable (leading coeff inverted mod p)
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    int db = poly_deg(b);
    if (db < 0) throw Error("polynomial modulus is zero");
    std::uint64_t lead_inv = mod_inv_prime(b[db], p);
    int da = poly_deg(a);
    while (da >= db) {
        std::uint64_t c = (a[da] * lead_inv) % p;
        if (c != 0) {
            int shift = da - db;
            for (int i = 0; i <= db; ++i) {
                std::uint64_t sub = (c * b[i]) % p;
                a[i + shift] = (std::uint32_t)((a[i + shift] + p - sub) % p);
            }
        }
        da = poly_deg(a);
    }
    a.resize(std::max(db, 1));
    return a;
}

Poly decode_poly(std::uint64_t code, std::uint64_t p, std::uint32_t len) {
    Poly c(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        c[i] = (std::uint32_t)(code % p);
        code /= p;
    }
    return c;
}

std::uint64_t encode_poly(const Poly& c, std::uint64_t p) {
    std::uint64_t code = 0;
    for (int i = (int)c.size() - 1; i >= 0; --i) code = code * p + c[i];
    return code;
}

bool is_irreducible(const Poly& f, std::uint64_t p, std::uint32_t t) {
    // trial division by every monic polynomial of degree 1..t/2
    for (std::uint32_t k = 1; 2 * k <= t; ++k) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly d = decode_poly(code, p, k + 1);
            d[k] = 1;
            Poly r = poly_mod(f, d, p);
            if (poly_deg(r) < 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint32_t t) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < t; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f = decode_poly(code, p, t + 1);
        f[t] = 1;
        if (is_irreducible(f, p, t)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable for prime p
}

ArithCtx ArithCtx::prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw Error("field modulus must be prime: " + std::to_string(p));
    auto impl = std::make_shared<Impl>();
    impl->kind = CtxKind::PrimeField;
    impl->p = p;
    impl->t = 1;
    impl->size = p;
    ArithCtx c;
    c.impl_ = impl;
    return c;
}

ArithCtx ArithCtx::extension_field(std::uint64_t p, std::uint32_t t) {
    if (!is_prime(p)) throw Error("field characteristic must be prime: " + std::to_string(p));
    if (t == 0) throw Error("extension degree must be >= 1");
    if (t == 1) return prime_field(p);
    double logsize = t * std::log2((double)p);
    if (logsize > 32.0) throw Error("field size above 2^32 unsupported");
    auto impl = std::make_shared<Impl>();
    impl->kind = CtxKind::ExtensionField;
    impl->p = p;
    impl->t = t;
    impl->size = 1;
    for (std::uint32_t i = 0; i < t; ++i) impl->size *= p;
    impl->redpoly = smallest_irreducible(p, t);
    impl->p_is_two = (p == 2);
    if (impl->p_is_two) {
        impl->redpoly_bits = 0;
        for (std::uint32_t i = 0; i <= t; ++i)
            if (impl->redpoly[i]) impl->redpoly_bits |= (std::uint64_t)1 << i;
    }
    ArithCtx c;
    c.impl_ = impl;
    return c;
}

ArithCtx ArithCtx::ring(std::uint64_t d) {
    if (d < 2) throw Error("ring modulus must be >= 2");
    auto impl = std::make_shared<Impl>();
    impl->kind = CtxKind::ModularRing;
    impl->p = d;
    impl->t = 1;
    impl->size = d;
    ArithCtx c;
    c.impl_ = impl;
    return c;
}

ArithCtx ArithCtx::make(CtxKind kind, std::uint64_t p_or_d, std::uint32_t t) {
    switch (kind) {
        case CtxKind::PrimeField:
            if (t != 1) throw Error("prime field takes degree 1");
            return prime_field(p_or_d);
        case CtxKind::ExtensionField: return extension_field(p_or_d, t);
        case CtxKind::ModularRing:
            if (t != 1) throw Error("ring takes degree 1");
            return ring(p_or_d);
    }
    throw Error("bad ctx kind");
}

std::uint32_t ArithCtx::add(std::uint32_t a, std::uint32_t b) const {
    const Impl& im = *impl_;
    if (im.kind != CtxKind::ExtensionField)
        return (std::uint32_t)(((std::uint64_t)a + b) % im.p);
    if (im.p_is_two) return a ^ b;
    std::uint64_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < im.t; ++i) {
        std::uint64_t da = a % im.p, db = b % im.p;
        a = (std::uint32_t)(a / im.p);
        b = (std::uint32_t)(b / im.p);
        r += ((da + db) % im.p) * scale;
        scale *= im.p;
    }
    return (std::uint32_t)r;
}

std::uint32_t ArithCtx::neg(std::uint32_t a) const {
    const Impl& im = *impl_;
    if (im.kind != CtxKind::ExtensionField)
        return a == 0 ? 0 : (std::uint32_t)(im.p - a);
    if (im.p_is_two) return a;
    std::uint64_t r = 0, scale = 1;
    for (std::uint32_t i = 0; i < im.t; ++i) {
        std::uint64_t da = a % im.p;
        a = (std::uint32_t)(a / im.p);
        r += (da == 0 ? 0 : im.p - da) * scale;
        scale *= im.p;
    }
    return (std::uint32_t)r;
}

std::uint32_t ArithCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t ArithCtx::mul(std::uint32_t a, std::uint32_t b) const {
    const Impl& im = *impl_;
    if (im.kind != CtxKind::ExtensionField)
        return (std::uint32_t)(((std::uint64_t)a * b) % im.p);
    if (im.p_is_two) {
        // carryless multiply, then reduce by the bit-coded polynomial
        std::uint64_t acc = 0, x = a;
        for (std::uint32_t i = 0; i < im.t; ++i)
            if ((b >> i) & 1) acc ^= x << i;
        for (int bit = 2 * (int)im.t - 2; bit >= (int)im.t; --bit)
            if ((acc >> bit) & 1) acc ^= im.redpoly_bits << (bit - im.t);
        return (std::uint32_t)acc;
    }
    Poly pa = decode_poly(a, im.p, im.t), pb = decode_poly(b, im.p, im.t);
    Poly prod = poly_mul(pa, pb, im.p);
    Poly red = poly_mod(prod, im.redpoly, im.p);
    red.resize(im.t, 0);
    return (std::uint32_t)encode_poly(red, im.p);
}

std::uint32_t ArithCtx::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t ArithCtx::inv(std::uint32_t a) const {
    const Impl& im = *impl_;
    if (!is_field()) throw UnsupportedOperation("inverse over ring");
    if (a == 0) throw Error("zero has no inverse");
    if (im.kind == CtxKind::PrimeField)
        return (std::uint32_t)mod_inv_prime(a, im.p);
    return pow(a, im.size - 2);
}

}  // namespace secnet
