#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "secnet/util.hpp"

namespace secnet {

enum class CtxKind { PrimeField, ExtensionField, ModularRing };

// Arithmetic context handle for GF(p), GF(p^t) or Z_d. Elements are canonical
// codes: residues 0..p-1 (0..d-1 for rings), and for extension fields the
// little-endian base-p digit code of the coefficient vector. Handles are
// cheap to copy and immutable after construction.
class ArithCtx {
public:
    ArithCtx() = default;

    static ArithCtx prime_field(std::uint64_t p);
    // Reduction polynomial is the lexicographically smallest monic
    // irreducible of degree t over GF(p) (smallest integer code), so the
    // same (p, t) always names the same field.
    static ArithCtx extension_field(std::uint64_t p, std::uint32_t t);
    static ArithCtx ring(std::uint64_t d);
    // Dispatch used by the file format: kind + p-or-d + t.
    static ArithCtx make(CtxKind kind, std::uint64_t p_or_d, std::uint32_t t);

    CtxKind kind() const { return impl_->kind; }
    bool is_field() const { return impl_->kind != CtxKind::ModularRing; }
    std::uint64_t size() const { return impl_->size; }          // q = p^t, or d
    std::uint64_t characteristic() const { return impl_->p; }   // p, or d for rings
    std::uint32_t degree() const { return impl_->t; }
    // Coefficients c_0..c_t of the reduction polynomial (extension only).
    const std::vector<std::uint32_t>& reduction_poly() const { return impl_->redpoly; }

    bool valid_element(std::uint64_t v) const { return v < impl_->size; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // fields only, a != 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    bool same_as(const ArithCtx& o) const { return impl_ == o.impl_ || equal_params(o); }

    friend bool operator==(const ArithCtx& a, const ArithCtx& b) { return a.same_as(b); }

private:
    struct Impl {
        CtxKind kind;
        std::uint64_t p;    // modulus (prime or ring modulus)
        std::uint32_t t;    // extension degree, 1 otherwise
        std::uint64_t size;
        std::vector<std::uint32_t> redpoly;  // c_0..c_t, monic
        bool p_is_two = false;
        std::uint64_t redpoly_bits = 0;      // bit code when p == 2
    };

    bool equal_params(const ArithCtx& o) const {
        return impl_ && o.impl_ && impl_->kind == o.impl_->kind &&
               impl_->p == o.impl_->p && impl_->t == o.impl_->t;
    }

    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);

// Smallest-integer-code monic irreducible of degree t over GF(p),
// returned as coefficients c_0..c_t.
std::vector<std::uint32_t> smallest_irreducible(std::uint64_t p, std::uint32_t t);

}  // namespace secnet
