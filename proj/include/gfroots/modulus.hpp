#ifndef GFROOTS_MODULUS_HPP
#define GFROOTS_MODULUS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "chien.hpp"
#include "gf.hpp"
#include "poly.hpp"

namespace gfroots {

class ConfigMismatch final : public Error {
public:
    using Error::Error;
};

/// Ordered factor chain of the group order m, outer cycle first. The search
/// nests one loop per factor; performance is best when the chain is
/// non-increasing (smallest periods innermost).
struct CycleConfig {
    std::vector<std::uint32_t> factors;
    bool derived = false; // factored here rather than one of the standard configurations

    std::uint64_t product() const
    {
        std::uint64_t p = 1;
        for (auto f : factors)
            p *= f;
        return p;
    }

    bool non_increasing() const
    {
        return std::is_sorted(factors.rbegin(), factors.rend());
    }

    /// Loop strides s_j = f_1 * ... * f_{j-1}; the level-j scale constant is
    /// alpha^{s_j} and output indices decompose as sum of i_j * s_j.
    std::vector<std::uint64_t> strides() const
    {
        std::vector<std::uint64_t> s(factors.size());
        std::uint64_t acc = 1;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            s[j] = acc;
            acc *= factors[j];
        }
        return s;
    }

    /// Remaining products D_{j+1} = f_{j+1} * ... * f_k: the fold length
    /// applied below level j (1 for the innermost level).
    std::vector<std::uint64_t> fold_lengths() const
    {
        std::vector<std::uint64_t> d(factors.size());
        std::uint64_t acc = 1;
        for (std::size_t j = factors.size(); j-- > 0;) {
            d[j] = acc;
            acc *= factors[j];
        }
        return d;
    }
};

/// The standard cycle configuration for GF(2^n), or nullopt when m = 2^n - 1
/// is prime and the subgroup decomposition does not exist.
inline std::optional<CycleConfig> builtin_config(unsigned bits)
{
    switch (bits) {
    case 4:  return CycleConfig{{5, 3}, true};
    case 5:  return std::nullopt; // 31 prime
    case 6:  return CycleConfig{{7, 3, 3}, true};
    case 7:  return std::nullopt; // 127 prime
    case 8:  return CycleConfig{{17, 5, 3}, false};
    case 9:  return CycleConfig{{73, 7}, false};
    case 10: return CycleConfig{{31, 11, 3}, false};
    case 11: return CycleConfig{{89, 23}, false};
    case 12: return CycleConfig{{13, 7, 5, 3, 3}, false};
    case 13: return std::nullopt; // 8191 prime
    case 14: return CycleConfig{{127, 43, 3}, false};
    case 15: return CycleConfig{{151, 31, 7}, false};
    case 16: return CycleConfig{{257, 17, 5, 3}, false};
    default:
        throw Error("field bit width must be in [4, 16], got " + std::to_string(bits));
    }
}

/// Structural worst-case multiplication count of modulus_search for a
/// degree-t polynomial: (f1-1)*t plus, per deeper level j, the number of
/// scale steps times the level's dense length minus one,
///   (f1...f_{j-1}) * (f_j - 1) * min(t, D_j - 1).
/// With corner exclusion off this is the exact count on every instance.
inline std::uint64_t predict_max_muls(const CycleConfig& config, std::uint64_t t)
{
    const auto& f = config.factors;
    if (f.empty())
        return 0;
    std::uint64_t total = (f[0] - 1) * t;
    std::uint64_t stride = f[0];
    std::uint64_t remaining = config.product() / f[0]; // D_2
    for (std::size_t j = 1; j < f.size(); ++j) {
        total += stride * (f[j] - 1) * std::min<std::uint64_t>(t, remaining - 1);
        stride *= f[j];
        remaining /= f[j];
    }
    return total;
}

namespace detail {

inline void validate_config(const GaloisField& field, const CycleConfig& config)
{
    if (config.factors.empty() || config.product() != field.order())
        throw ConfigMismatch("factor product does not equal the group order");
    for (auto f : config.factors)
        if (f < 2)
            throw ConfigMismatch("cycle factors must be at least 2");
}

struct ModulusEngine {
    const GaloisField& field;
    const std::vector<std::uint32_t>& factors;
    std::vector<std::uint64_t> stride;
    std::vector<std::uint64_t> fold_len;
    bool exclude;
    OpCounter& counter;
    std::vector<std::vector<GfElement>> level_poly;
    std::vector<std::vector<GfElement>> scale_factors;
    std::vector<std::uint64_t> found;

    ModulusEngine(const GaloisField& fld, const CycleConfig& cfg, bool excl, OpCounter& ctr,
                  std::vector<GfElement> top)
        : field(fld), factors(cfg.factors), stride(cfg.strides()), fold_len(cfg.fold_lengths()),
          exclude(excl), counter(ctr)
    {
        const std::size_t k = factors.size();
        level_poly.resize(k);
        level_poly[0] = std::move(top);
        scale_factors.resize(k);
        std::size_t len = level_poly[0].size();
        for (std::size_t j = 0; j < k; ++j) {
            if (j > 0)
                len = std::min<std::size_t>(len, fold_len[j - 1]);
            scale_factors[j].resize(len);
            for (std::size_t i = 0; i < len; ++i)
                scale_factors[j][i] = field.alpha_pow(stride[j] * i);
        }
    }

    void run() { descend(0, 0); }

    void descend(std::size_t level, std::uint64_t base_exp)
    {
        auto& v = level_poly[level];
        const std::uint32_t f = factors[level];
        if (level + 1 == factors.size()) {
            if (exclude && std::all_of(v.begin(), v.end(), [](GfElement c) { return c == 0; })) {
                // The whole coset solves the fold binomial: every point is a
                // root and no probing is needed.
                for (std::uint32_t i = 0; i < f; ++i)
                    found.push_back(base_exp + i * stride[level]);
                return;
            }
            for (std::uint32_t i = 0; i < f; ++i) {
                if (i > 0)
                    dense_scale(field, v, scale_factors[level], counter);
                if (dense_eval_at_one(v, counter) == 0) {
                    found.push_back(base_exp + i * stride[level]);
                    if (exclude)
                        dense_div_by_x_plus_1(v, counter);
                }
            }
            return;
        }
        for (std::uint32_t i = 0; i < f; ++i) {
            if (i > 0)
                dense_scale(field, v, scale_factors[level], counter);
            dense_fold(v, fold_len[level], level_poly[level + 1], counter);
            descend(level + 1, base_exp + i * stride[level]);
        }
    }
};

} // namespace detail

/// Nested subgroup search: scan the multiplicative group as nested cycles
/// given by the factor chain, reducing the polynomial modulo x^D + 1 before
/// entering each inner cycle so the inner scans touch only short
/// polynomials. With exclude_corners, roots found in the innermost cycle
/// are divided out of the (short) innermost polynomial as in the excluding
/// Chien scan; exclusion off makes the multiplication count equal
/// predict_max_muls on every instance.
inline SearchResult modulus_search(const GaloisField& field, const Polynomial& p,
                                   const CycleConfig& config, bool exclude_corners = true)
{
    detail::validate_config(field, config);
    auto prep = detail::strip_zero_roots(p);
    SearchResult res;
    res.zero_root_multiplicity = prep.zero_mult;

    detail::ModulusEngine engine(field, config, exclude_corners, res.counter,
                                 std::move(prep.coeffs));
    engine.run();

    std::sort(engine.found.begin(), engine.found.end());
    res.roots.reserve(engine.found.size());
    for (auto e : engine.found)
        res.roots.push_back(field.alpha_pow(e));
    return res;
}

/// Two-level reference variant: instead of rescaling p, reduce it by the
/// shifted binomial x^{m2} + alpha^{m2*i1} for each outer index and probe
/// the reduced polynomial directly. Kept for equivalence testing against
/// modulus_search.
inline SearchResult modulus_search_premultiplied(const GaloisField& field, const Polynomial& p,
                                                 const CycleConfig& config)
{
    detail::validate_config(field, config);
    if (config.factors.size() != 2)
        throw ConfigMismatch("premultiplied variant requires exactly two levels");
    auto prep = detail::strip_zero_roots(p);
    SearchResult res;
    res.zero_root_multiplicity = prep.zero_mult;

    const std::uint64_t m1 = config.factors[0];
    const std::uint64_t m2 = config.factors[1];
    const Polynomial base{std::vector<GfElement>(prep.coeffs)};

    std::vector<std::uint64_t> found;
    for (std::uint64_t i1 = 0; i1 < m1; ++i1) {
        const GfElement c = field.alpha_pow(m2 * i1);
        const Polynomial reduced = mod_binomial(field, base, m2, c, res.counter);
        for (std::uint64_t i2 = 0; i2 < m2; ++i2) {
            const std::uint64_t e = i1 + m1 * i2;
            if (eval(field, reduced, field.alpha_pow(e), res.counter) == 0)
                found.push_back(e);
        }
    }

    std::sort(found.begin(), found.end());
    res.roots.reserve(found.size());
    for (auto e : found)
        res.roots.push_back(field.alpha_pow(e));
    return res;
}

} // namespace gfroots

#endif
