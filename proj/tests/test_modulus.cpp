#include <catch2/catch_amalgamated.hpp>

#include "gfroots/bench.hpp"
#include "gfroots/modulus.hpp"
#include "oracles.hpp"

using namespace gfroots;

namespace {

Polynomial make_poly(std::initializer_list<GfElement> coeffs_low_first)
{
    return Polynomial(std::vector<GfElement>(coeffs_low_first));
}

} // namespace

TEST_CASE("builtin cycle configurations", "[modulus]")
{
    CHECK(builtin_config(8)->factors == std::vector<std::uint32_t>{17, 5, 3});
    CHECK(builtin_config(16)->factors == std::vector<std::uint32_t>{257, 17, 5, 3});
    CHECK(builtin_config(12)->factors == std::vector<std::uint32_t>{13, 7, 5, 3, 3});
    CHECK_FALSE(builtin_config(13).has_value()); // 8191 prime
    CHECK_FALSE(builtin_config(5).has_value());  // 31 prime
    CHECK_FALSE(builtin_config(7).has_value());  // 127 prime

    CHECK(builtin_config(4)->factors == std::vector<std::uint32_t>{5, 3});
    CHECK(builtin_config(4)->derived);
    CHECK(builtin_config(6)->derived);
    CHECK_FALSE(builtin_config(8)->derived);

    for (unsigned n = 4; n <= 16; ++n) {
        const auto cfg = builtin_config(n);
        if (!cfg)
            continue;
        CHECK(cfg->product() == (1u << n) - 1);
        CHECK(cfg->non_increasing());
    }

    CHECK(builtin_config(8)->strides() == std::vector<std::uint64_t>{1, 17, 85});
    CHECK(builtin_config(8)->fold_lengths() == std::vector<std::uint64_t>{15, 3, 1});
}

TEST_CASE("predictor reproduces the GF(2^8) max column", "[modulus]")
{
    const CycleConfig cfg = *builtin_config(8);
    const std::uint64_t expected[] = {1180, 1612, 1772, 1932, 2092, 2252, 2412,
                                      2572, 2732, 2892, 3052, 3212, 3372, 3532};
    for (int i = 0; i < 14; ++i)
        CHECK(predict_max_muls(cfg, 10ull * (i + 1)) == expected[i]);
}

TEST_CASE("predictor linear laws at saturation", "[modulus]")
{
    struct Law {
        unsigned bits;
        std::uint64_t threshold;
        std::uint64_t constant;
        std::uint64_t slope;
    };
    // max muls = constant + slope*t once t reaches the threshold
    const Law laws[] = {
        {8, 14, 1292, 16},   {9, 6, 2628, 72},     {10, 32, 11284, 30},
        {11, 22, 43076, 88}, {12, 314, 53248, 12},
    };
    for (const auto& law : laws) {
        const CycleConfig cfg = *builtin_config(law.bits);
        for (std::uint64_t t :
             {law.threshold, law.threshold + 1, 2 * law.threshold, 5 * law.threshold,
              10 * law.threshold})
            CHECK(predict_max_muls(cfg, t) == law.constant + law.slope * t);
    }

    CHECK(predict_max_muls(*builtin_config(9), 10) == 3348);
    CHECK(predict_max_muls(*builtin_config(12), 400) == 58048);
}

TEST_CASE("two-level predictor is the closed-form expression", "[modulus]")
{
    SplitMix64 rng(91);
    for (int i = 0; i < 100; ++i) {
        const std::uint32_t m1 = static_cast<std::uint32_t>(2 + rng.bounded(500));
        const std::uint32_t m2 = static_cast<std::uint32_t>(2 + rng.bounded(500));
        const std::uint64_t t = 1 + rng.bounded(2000);
        const CycleConfig cfg{{m1, m2}};
        const std::uint64_t want =
            (m1 - 1) * t + std::uint64_t(m1) * (m2 - 1) * std::min<std::uint64_t>(m2 - 1, t);
        REQUIRE(predict_max_muls(cfg, t) == want);
    }
}

TEST_CASE("modulus search finds the right roots", "[modulus]")
{
    GaloisField f(8);
    const CycleConfig cfg = *builtin_config(8);

    auto r = modulus_search(f, make_poly({1, 1}), cfg);
    CHECK(r.roots == std::vector<GfElement>{1});

    SplitMix64 rng(101);
    const auto inst = random_instance(f, 10, rng);
    const auto res = modulus_search(f, inst, cfg, true);
    CHECK(res.roots == oracle::brute_roots(f, inst));
    CHECK(res.counter.muls <= 1180);

    CHECK_THROWS_AS(modulus_search(f, Polynomial{}, cfg), ZeroPolynomial);
    CHECK_THROWS_AS(modulus_search(f, make_poly({1, 1}), CycleConfig{{3, 5}}), ConfigMismatch);
    CHECK_THROWS_AS(modulus_search(f, make_poly({1, 1}), CycleConfig{{255, 1}}), ConfigMismatch);
}

TEST_CASE("exhaustive equivalence on GF(2^4)", "[modulus]")
{
    GaloisField f(4);
    const CycleConfig cfg = *builtin_config(4);
    // all monic polynomials of degree <= 3 with nonzero constant term
    for (std::uint32_t deg = 1; deg <= 3; ++deg) {
        std::vector<GfElement> coeffs(deg + 1, 0);
        coeffs[deg] = 1;
        const std::uint32_t inner = deg >= 1 ? 1u << (4 * (deg - 1)) : 1;
        for (std::uint32_t p0 = 1; p0 <= 15; ++p0) {
            coeffs[0] = static_cast<GfElement>(p0);
            for (std::uint32_t mid = 0; mid < inner; ++mid) {
                for (std::uint32_t j = 1; j < deg; ++j)
                    coeffs[j] = static_cast<GfElement>((mid >> (4 * (j - 1))) & 0xf);
                const Polynomial p{std::vector<GfElement>(coeffs)};
                const auto want = oracle::brute_roots(f, p);
                REQUIRE(modulus_search(f, p, cfg, true).roots == want);
                REQUIRE(modulus_search(f, p, cfg, false).roots == want);
            }
        }
    }
}

TEST_CASE("exclusion off hits the predicted count exactly", "[modulus]")
{
    for (unsigned n : {4u, 6u, 8u, 9u, 10u, 11u, 12u}) {
        GaloisField f(n);
        const CycleConfig cfg = *builtin_config(n);
        SplitMix64 rng(111 + n);
        for (std::uint32_t t : {1u, 2u, 10u, 50u}) {
            if (t >= f.order())
                continue;
            const std::uint64_t predicted = predict_max_muls(cfg, t);
            for (int i = 0; i < 25; ++i) {
                const auto p = random_instance(f, t, rng);
                const auto res = modulus_search(f, p, cfg, false);
                REQUIRE(res.counter.muls == predicted);
            }
        }
    }
}

TEST_CASE("exclusion on never exceeds the prediction", "[modulus]")
{
    GaloisField f(8);
    const CycleConfig cfg = *builtin_config(8);
    SplitMix64 rng(121);
    for (int i = 0; i < 300; ++i) {
        const auto t = 1 + rng.bounded(60);
        const auto p = random_instance(f, t, rng);
        const auto res = modulus_search(f, p, cfg, true);
        REQUIRE(res.counter.muls <= predict_max_muls(cfg, t));
    }

    // a root at alpha^0 sits at innermost index 0, so the saving is strict
    const auto p = from_roots(f, std::vector<GfElement>{1, f.alpha_pow(7)});
    CHECK(modulus_search(f, p, cfg, true).counter.muls < predict_max_muls(cfg, 2));
}

TEST_CASE("coset wiped out by the innermost fold", "[modulus]")
{
    GaloisField f(8);
    const CycleConfig cfg = *builtin_config(8);
    // the innermost coset through alpha^5: exponents 5, 90, 175
    const std::vector<GfElement> coset = {f.alpha_pow(5), f.alpha_pow(90), f.alpha_pow(175)};
    const auto p = from_roots(f, coset);
    const auto want = oracle::brute_roots(f, p);
    REQUIRE(want.size() == 3);
    CHECK(modulus_search(f, p, cfg, true).roots == want);
    CHECK(modulus_search(f, p, cfg, false).roots == want);
    CHECK(modulus_search(f, p, cfg, true).counter.muls < predict_max_muls(cfg, 3));
}

TEST_CASE("x^m + 1 yields every nonzero element exactly once", "[modulus]")
{
    for (unsigned n : {4u, 8u}) {
        GaloisField f(n);
        std::vector<GfElement> all(f.order());
        std::iota(all.begin(), all.end(), GfElement{1});
        const auto p = from_roots(f, all);
        const auto res = modulus_search(f, p, *builtin_config(n), true);
        REQUIRE(res.roots.size() == f.order());
        for (std::uint32_t i = 0; i < f.order(); ++i)
            REQUIRE(res.roots[i] == f.alpha_pow(i)); // sorted by exponent, no repeats
    }
}

TEST_CASE("single-factor chain degenerates to the Chien scan", "[modulus]")
{
    GaloisField f(8);
    const CycleConfig cfg{{255}};
    SplitMix64 rng(131);
    const auto p = random_instance(f, 10, rng);
    const auto res = modulus_search(f, p, cfg, false);
    CHECK(res.counter.muls == 254ull * 10);
    CHECK(res.roots == oracle::brute_roots(f, p));
}

TEST_CASE("premultiplied variant matches on two-level chains", "[modulus]")
{
    GaloisField f(8);
    const CycleConfig cfg{{17, 15}};
    const CycleConfig full = *builtin_config(8);

    SplitMix64 rng(141);
    for (int i = 0; i < 1000; ++i) {
        const auto t = 1 + rng.bounded(24);
        const auto p = random_instance(f, t, rng);
        const auto a = modulus_search_premultiplied(f, p, cfg);
        const auto b = modulus_search(f, p, full, true);
        REQUIRE(a.roots == b.roots);
    }

    // the inner loop's points all satisfy x^{m2} = alpha^{m2*i1}
    for (std::uint64_t i1 = 0; i1 < 17; ++i1)
        for (std::uint64_t i2 = 0; i2 < 15; ++i2)
            REQUIRE(f.pow(f.alpha_pow(i1 + 17 * i2), 15) == f.alpha_pow(15 * i1));

    // p = x^{m2} + alpha^{m2*i1} reduces to zero in its own outer slot
    const std::uint64_t i1 = 4;
    std::vector<GfElement> coeffs(16, 0);
    coeffs[0] = f.alpha_pow(15 * i1);
    coeffs[15] = 1;
    const Polynomial p{std::move(coeffs)};
    const auto res = modulus_search_premultiplied(f, p, cfg);
    REQUIRE(res.roots.size() == 15);
    REQUIRE(res.roots == oracle::brute_roots(f, p));

    CHECK_THROWS_AS(modulus_search_premultiplied(f, p, full), ConfigMismatch);
}

TEST_CASE("a reversed user-supplied chain still works", "[modulus]")
{
    GaloisField f(8);
    const CycleConfig reversed{{3, 5, 17}};
    CHECK_FALSE(reversed.non_increasing());
    SplitMix64 rng(151);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_instance(f, 1 + rng.bounded(20), rng);
        REQUIRE(modulus_search(f, p, reversed, true).roots == oracle::brute_roots(f, p));
    }
}

TEST_CASE("mixed-radix output indices cover the group exactly once", "[modulus]")
{
    const CycleConfig cfg = *builtin_config(8);
    const auto strides = cfg.strides();
    std::vector<bool> seen(255, false);
    for (std::uint32_t i1 = 0; i1 < 17; ++i1)
        for (std::uint32_t i2 = 0; i2 < 5; ++i2)
            for (std::uint32_t i3 = 0; i3 < 3; ++i3) {
                const auto e = i1 * strides[0] + i2 * strides[1] + i3 * strides[2];
                REQUIRE(e < 255);
                REQUIRE(!seen[e]);
                seen[e] = true;
            }
}

TEST_CASE("zero roots pass through the modulus search", "[modulus]")
{
    GaloisField f(8);
    const auto res = modulus_search(f, make_poly({0, 0, 1, 1}), *builtin_config(8), true);
    CHECK(res.zero_root_multiplicity == 2);
    CHECK(res.roots == std::vector<GfElement>{1});
}
