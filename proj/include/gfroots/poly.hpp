#ifndef GFROOTS_POLY_HPP
#define GFROOTS_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace gfroots {

class ZeroScale final : public Error {
public:
    using Error::Error;
};

class NotDivisible final : public Error {
public:
    using Error::Error;
};

class DuplicateRoot final : public Error {
public:
    using Error::Error;
};

class ZeroRoot final : public Error {
public:
    using Error::Error;
};

/// Dense polynomial over GF(2^n), lowest degree first, kept in canonical
/// form (no stored zero leading coefficient). The zero polynomial is the
/// empty coefficient sequence and reports degree() == -1.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<GfElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    GfElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : GfElement{0}; }

    std::span<const GfElement> coeffs() const { return coeffs_; }

    bool operator==(const Polynomial&) const = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<GfElement> coeffs_;
};

/// p(x) by Horner's rule. Costs deg(p) muls and deg(p) adds.
inline GfElement eval(const GaloisField& field, const Polynomial& p, GfElement x, OpCounter& counter)
{
    if (p.is_zero())
        return 0;
    auto c = p.coeffs();
    GfElement acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;)
        acc = GaloisField::add(field.mul(acc, x, counter), c[i], counter);
    return acc;
}

/// p(1) as the XOR of all coefficients: no multiplications, deg(p) adds.
inline GfElement eval_at_one(const Polynomial& p, OpCounter& counter)
{
    if (p.is_zero())
        return 0;
    auto c = p.coeffs();
    GfElement acc = c[0];
    for (std::size_t i = 1; i < c.size(); ++i)
        acc = GaloisField::add(acc, c[i], counter);
    return acc;
}

/// Argument substitution p(x) -> p(s*x): coefficient i becomes p_i * s^i.
/// Each coefficient update for i = 1..deg(p) is one counted mul; the
/// running powers of s come from uncounted exponent arithmetic.
inline Polynomial scale_arg(const GaloisField& field, const Polynomial& p, GfElement s,
                            OpCounter& counter)
{
    if (s == 0)
        throw ZeroScale("scale factor must be nonzero");
    if (p.is_zero())
        return p;
    auto c = p.coeffs();
    std::vector<GfElement> out(c.begin(), c.end());
    GfElement step = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
        step = field.mul_raw(step, s);
        out[i] = field.mul(out[i], step, counter);
    }
    return Polynomial(std::move(out));
}

/// Remainder of p by x^k + 1: r_j = XOR of p_{j+k*l}. No multiplications;
/// one counted add per folded coefficient pair.
inline Polynomial mod_fold(const Polynomial& p, std::size_t k, OpCounter& counter)
{
    auto c = p.coeffs();
    std::vector<GfElement> out(c.begin(), c.begin() + std::min(c.size(), k));
    for (std::size_t i = k; i < c.size(); ++i)
        out[i % k] = GaloisField::add(out[i % k], c[i], counter);
    return Polynomial(std::move(out));
}

/// Remainder of p by x^k + c, via blockwise Horner over the identity
/// x^k = c. Counted muls for every power-of-c application.
inline Polynomial mod_binomial(const GaloisField& field, const Polynomial& p, std::size_t k,
                               GfElement c, OpCounter& counter)
{
    if (c == 0)
        throw ZeroScale("binomial constant must be nonzero");
    auto src = p.coeffs();
    if (src.size() <= k)
        return p;
    const std::size_t blocks = (src.size() + k - 1) / k;
    std::vector<GfElement> acc(src.begin() + static_cast<std::ptrdiff_t>((blocks - 1) * k),
                               src.end());
    for (std::size_t l = blocks - 1; l-- > 0;) {
        const GfElement* block = src.data() + l * k;
        for (std::size_t j = 0; j < acc.size(); ++j)
            acc[j] = GaloisField::add(field.mul(acc[j], c, counter), block[j], counter);
        if (acc.size() < k)
            acc.insert(acc.end(), block + acc.size(), block + k);
    }
    return Polynomial(std::move(acc));
}

/// Synthetic division by (x + 1); valid only when 1 is a root.
/// Additions only: 0 muls, deg(p) - 1 adds.
inline Polynomial div_by_x_plus_1(const Polynomial& p, OpCounter& counter)
{
    auto c = p.coeffs();
    GfElement sum = 0;
    for (GfElement v : c)
        sum ^= v;
    if (sum != 0)
        throw NotDivisible("1 is not a root");
    if (c.size() < 2)
        return Polynomial{}; // zero polynomial in, zero polynomial out
    std::vector<GfElement> q(c.size() - 1);
    q.back() = c.back();
    for (std::size_t i = c.size() - 2; i-- > 0;)
        q[i] = GaloisField::add(c[i + 1], q[i + 1], counter);
    return Polynomial(std::move(q));
}

/// Monic product of (x - r) over the given distinct nonzero roots.
/// Fixture construction: entirely uncounted.
inline Polynomial from_roots(const GaloisField& field, std::span<const GfElement> roots)
{
    std::vector<GfElement> p{1};
    std::vector<bool> seen(static_cast<std::size_t>(field.order()) + 1, false);
    for (GfElement r : roots) {
        if (r == 0)
            throw ZeroRoot("roots must be nonzero");
        if (seen[r])
            throw DuplicateRoot("roots must be distinct");
        seen[r] = true;
        // p := p * (x + r)
        p.push_back(0);
        for (std::size_t i = p.size(); i-- > 0;) {
            GfElement shifted = i > 0 ? p[i - 1] : GfElement{0};
            p[i] = static_cast<GfElement>(shifted ^ field.mul_raw(p[i], r));
        }
    }
    return Polynomial(std::move(p));
}

namespace detail {

// Dense fixed-length helpers for the search engines. These deliberately do
// not trim: the engines' counting contract is in terms of array length, not
// mathematical degree.

inline void dense_scale(const GaloisField& field, std::vector<GfElement>& v,
                        std::span<const GfElement> factors, OpCounter& counter)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        v[i] = field.mul(v[i], factors[i], counter);
}

inline GfElement dense_eval_at_one(const std::vector<GfElement>& v, OpCounter& counter)
{
    if (v.empty())
        return 0;
    GfElement acc = v[0];
    for (std::size_t i = 1; i < v.size(); ++i)
        acc = GaloisField::add(acc, v[i], counter);
    return acc;
}

inline void dense_fold(const std::vector<GfElement>& src, std::size_t k,
                       std::vector<GfElement>& dst, OpCounter& counter)
{
    dst.assign(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(std::min(src.size(), k)));
    for (std::size_t i = k; i < src.size(); ++i)
        dst[i % k] = GaloisField::add(dst[i % k], src[i], counter);
}

inline void dense_div_by_x_plus_1(std::vector<GfElement>& v, OpCounter& counter)
{
    if (v.size() < 2) {
        v.clear();
        return;
    }
    for (std::size_t i = v.size() - 1; i-- > 1;)
        v[i] = GaloisField::add(v[i + 1], v[i], counter);
    v.erase(v.begin());
}

} // namespace detail

} // namespace gfroots

#endif
