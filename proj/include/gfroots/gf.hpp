#ifndef GFROOTS_GF_HPP
#define GFROOTS_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfroots {

/// Field element in polynomial basis; bit i is the coefficient of x^i.
using GfElement = std::uint16_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Table construction produced a zero product (the modulus has a nontrivial factor).
class NotIrreducible final : public Error {
public:
    using Error::Error;
};

/// x does not generate the full multiplicative group under the given modulus.
class RootNotPrimitive final : public Error {
public:
    using Error::Error;
};

class ZeroToNegativePower final : public Error {
public:
    using Error::Error;
};

/// Tally of counted field operations for one search invocation.
/// Counting is unconditional: every mul() call costs 1, even by 0 or 1.
struct OpCounter {
    std::uint64_t muls = 0;
    std::uint64_t adds = 0;

    void reset() { muls = adds = 0; }
};

/// Returns the built-in degree-n reduction polynomial (primitive, root x).
inline std::uint32_t default_reduction_poly(unsigned bits)
{
    // x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x^3+1, x^8+x^4+x^3+x^2+1,
    // x^9+x^4+1, x^10+x^3+1, x^11+x^2+1, x^12+x^6+x^4+x+1,
    // x^13+x^4+x^3+x+1, x^14+x^10+x^6+x+1, x^15+x+1, x^16+x^12+x^3+x+1
    static constexpr std::uint32_t kPolys[] = {
        0x13,   0x25,   0x43,   0x89,   0x11d,  0x211,  0x409,
        0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b,
    };
    if (bits < 4 || bits > 16)
        throw Error("field bit width must be in [4, 16], got " + std::to_string(bits));
    return kPolys[bits - 4];
}

/// GF(2^n) realized through log/antilog tables over a primitive root x.
///
/// Immutable after construction and safe to share across concurrent
/// searches; counted operations write only to the caller's OpCounter.
class GaloisField {
public:
    static constexpr unsigned kMinBits = 4;
    static constexpr unsigned kMaxBits = 16;

    explicit GaloisField(unsigned bits) : GaloisField(bits, default_reduction_poly(bits)) {}

    GaloisField(unsigned bits, std::uint32_t reduction_poly)
        : bits_(bits), order_((1u << bits) - 1), poly_(reduction_poly)
    {
        if (bits < kMinBits || bits > kMaxBits)
            throw Error("field bit width must be in [4, 16], got " + std::to_string(bits));
        if (reduction_poly >> bits != 1u)
            throw Error("reduction polynomial must have degree exactly n");
        build_tables();
    }

    unsigned bits() const { return bits_; }

    /// Multiplicative group order m = 2^n - 1.
    std::uint32_t order() const { return order_; }

    std::uint32_t reduction_poly() const { return poly_; }

    /// Counted product. Always charges exactly one multiplication.
    GfElement mul(GfElement a, GfElement b, OpCounter& counter) const
    {
        ++counter.muls;
        if (a == 0 || b == 0)
            return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= order_)
            s -= order_;
        return exp_[s];
    }

    /// Counted characteristic-2 sum. Charges exactly one addition.
    static GfElement add(GfElement a, GfElement b, OpCounter& counter)
    {
        ++counter.adds;
        return a ^ b;
    }

    /// Uncounted product, for fixtures and precomputation.
    GfElement mul_raw(GfElement a, GfElement b) const
    {
        if (a == 0 || b == 0)
            return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= order_)
            s -= order_;
        return exp_[s];
    }

    /// alpha^e with e reduced mod m. Uncounted.
    GfElement alpha_pow(std::uint64_t e) const { return exp_[e % order_]; }

    /// Uncounted exponentiation through log arithmetic; setup work is free.
    GfElement pow(GfElement base, std::int64_t e) const
    {
        if (base == 0) {
            if (e < 0)
                throw ZeroToNegativePower("zero base with negative exponent");
            return e == 0 ? GfElement{1} : GfElement{0};
        }
        const std::int64_t m = order_;
        std::int64_t r = (static_cast<std::int64_t>(log_[base]) * (e % m)) % m;
        if (r < 0)
            r += m;
        return exp_[r];
    }

    /// Discrete log of a nonzero element.
    std::uint32_t log(GfElement a) const
    {
        if (a == 0)
            throw Error("discrete log of zero is undefined");
        return log_[a];
    }

private:
    void build_tables()
    {
        const std::uint32_t field_size = order_ + 1;
        constexpr std::uint32_t kUnset = 0xffffffff;
        exp_.assign(order_, 0);
        log_.assign(field_size, kUnset);

        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order_; ++i) {
            if (x == 0)
                throw NotIrreducible("table construction hit a zero product");
            if (log_[x] != kUnset)
                throw RootNotPrimitive("x has order " + std::to_string(i - log_[x]) +
                                       " < " + std::to_string(order_));
            exp_[i] = static_cast<GfElement>(x);
            log_[x] = i;
            x <<= 1;
            if (x & field_size)
                x ^= poly_;
        }
        if (x == 0)
            throw NotIrreducible("table construction hit a zero product");
        if (x != 1)
            throw RootNotPrimitive("x does not return to 1 after m steps");
    }

    unsigned bits_;
    std::uint32_t order_;
    std::uint32_t poly_;
    std::vector<GfElement> exp_;
    std::vector<std::uint32_t> log_;
};

} // namespace gfroots

#endif
