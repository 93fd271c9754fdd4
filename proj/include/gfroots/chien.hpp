#ifndef GFROOTS_CHIEN_HPP
#define GFROOTS_CHIEN_HPP

#include <cstdint>
#include <vector>

#include "gf.hpp"
#include "poly.hpp"

namespace gfroots {

class ZeroPolynomial final : public Error {
public:
    using Error::Error;
};

/// Outcome of one root search: the nonzero roots (sorted by discrete log),
/// the multiplicity of x = 0 stripped before the scan, and the operation
/// counts the scan charged.
struct SearchResult {
    std::vector<GfElement> roots;
    std::uint32_t zero_root_multiplicity = 0;
    OpCounter counter;
};

namespace detail {

struct StrippedPoly {
    std::vector<GfElement> coeffs; // dense, constant term nonzero, leading nonzero
    std::uint32_t zero_mult = 0;
};

// Divides out x factors (uncounted bookkeeping) so every scan visits only
// the nonzero elements.
inline StrippedPoly strip_zero_roots(const Polynomial& p)
{
    if (p.is_zero())
        throw ZeroPolynomial("cannot search roots of the zero polynomial");
    auto c = p.coeffs();
    std::size_t k = 0;
    while (c[k] == 0)
        ++k;
    return {std::vector<GfElement>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()),
            static_cast<std::uint32_t>(k)};
}

} // namespace detail

/// Direct scan: evaluates p at every alpha^i. The oracle the other finders
/// are measured against.
inline SearchResult rough_search(const GaloisField& field, const Polynomial& p)
{
    auto prep = detail::strip_zero_roots(p);
    SearchResult res;
    res.zero_root_multiplicity = prep.zero_mult;
    const auto& v = prep.coeffs;
    for (std::uint32_t i = 0; i < field.order(); ++i) {
        const GfElement x = field.alpha_pow(i);
        GfElement acc = v.back();
        for (std::size_t j = v.size() - 1; j-- > 0;)
            acc = GaloisField::add(field.mul(acc, x, res.counter), v[j], res.counter);
        if (acc == 0)
            res.roots.push_back(x);
    }
    return res;
}

/// Chien scan: one argument scaling per step, probe at 1. Exactly
/// (m - 1) * deg(p) multiplications, no exceptions to the count.
inline SearchResult chien_search(const GaloisField& field, const Polynomial& p)
{
    auto prep = detail::strip_zero_roots(p);
    SearchResult res;
    res.zero_root_multiplicity = prep.zero_mult;
    auto v = prep.coeffs;

    std::vector<GfElement> factors(v.size());
    for (std::size_t j = 0; j < factors.size(); ++j)
        factors[j] = field.alpha_pow(j);

    for (std::uint32_t i = 0; i < field.order(); ++i) {
        if (i > 0)
            detail::dense_scale(field, v, factors, res.counter);
        if (detail::dense_eval_at_one(v, res.counter) == 0)
            res.roots.push_back(field.alpha_pow(i));
    }
    return res;
}

/// Chien scan with corner exclusion: each root found is divided out, so
/// later steps scale a smaller polynomial. Every division also charges a
/// restart penalty of one mul per surviving coefficient (the scale
/// constants have to be re-derived once the coefficients change).
inline SearchResult chien_search_excluding(const GaloisField& field, const Polynomial& p)
{
    auto prep = detail::strip_zero_roots(p);
    SearchResult res;
    res.zero_root_multiplicity = prep.zero_mult;
    auto v = prep.coeffs;

    std::vector<GfElement> factors(v.size());
    for (std::size_t j = 0; j < factors.size(); ++j)
        factors[j] = field.alpha_pow(j);

    for (std::uint32_t i = 0; i < field.order(); ++i) {
        if (i > 0)
            detail::dense_scale(field, v, factors, res.counter);
        if (detail::dense_eval_at_one(v, res.counter) == 0) {
            res.roots.push_back(field.alpha_pow(i));
            detail::dense_div_by_x_plus_1(v, res.counter);
            res.counter.muls += v.empty() ? 0 : v.size() - 1;
        }
    }
    return res;
}

} // namespace gfroots

#endif
