#ifndef GFROOTS_BENCH_HPP
#define GFROOTS_BENCH_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "chien.hpp"
#include "gf.hpp"
#include "modulus.hpp"
#include "poly.hpp"

namespace gfroots {

class DegreeTooLarge final : public Error {
public:
    using Error::Error;
};

/// splitmix64: the 64-bit mixing generator from Vigna's splitmix lineage.
/// Small, fast, and fully specified here so benchmark runs are reproducible
/// across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by modulo reduction of the 64-bit stream; the
    /// bias is below 2^-48 for the bounds used here (bound <= 2^16).
    std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Derives the generator for one trial from (seed, stream). Streams are
/// independent of execution order, so parallel trial scheduling cannot
/// change any result.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t stream)
{
    SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return SplitMix64(g.next());
}

/// Degree-t polynomial with t distinct nonzero roots sampled uniformly
/// without replacement (partial Fisher-Yates over the element list).
inline Polynomial random_instance(const GaloisField& field, std::uint32_t t, SplitMix64& rng)
{
    const std::uint32_t m = field.order();
    if (t < 1 || t > m)
        throw DegreeTooLarge("degree must be in [1, m]");
    std::vector<GfElement> pool(m);
    std::iota(pool.begin(), pool.end(), GfElement{1});
    for (std::uint32_t i = 0; i < t; ++i) {
        const auto j = i + static_cast<std::uint32_t>(rng.bounded(m - i));
        std::swap(pool[i], pool[j]);
    }
    return from_roots(field, std::span<const GfElement>(pool.data(), t));
}

struct AlgorithmSet {
    bool chien = true;
    bool chien_excluding = false;
    bool modulus = true;
    bool modulus_premultiplied = false;
};

struct BenchSpec {
    unsigned field_bits = 8;
    std::vector<std::uint32_t> degrees;
    std::uint32_t trials = 1000;
    std::uint64_t seed = 1;
    AlgorithmSet algorithms{};
    unsigned jobs = 1;
};

struct BenchRow {
    std::uint32_t t = 0;
    std::uint64_t chien_muls = 0;
    bool modulus_applicable = false;
    std::uint64_t max_muls = 0;           // observed max of the exclusion-free runs
    std::uint64_t predicted_max_muls = 0; // structural worst case
    double mean_muls = 0.0;               // mean of the corner-excluding runs
    double mean_adds = 0.0;
    double speedup = 0.0;
};

namespace detail {

inline bool same_roots(const SearchResult& a, const SearchResult& b)
{
    return a.roots == b.roots && a.zero_root_multiplicity == b.zero_root_multiplicity;
}

struct TrialRecord {
    std::uint64_t modulus_muls = 0;     // corner exclusion on
    std::uint64_t modulus_adds = 0;
    std::uint64_t modulus_max_muls = 0; // corner exclusion off
    std::uint64_t chien_muls = 0;
};

// Collapse a deeper chain to two levels so the premultiplied variant can
// run beside the others.
inline std::optional<CycleConfig> two_level(const CycleConfig& cfg, std::uint64_t m)
{
    if (cfg.factors.empty())
        return std::nullopt;
    const std::uint32_t f1 = cfg.factors[0];
    return CycleConfig{{f1, static_cast<std::uint32_t>(m / f1)}, cfg.derived};
}

} // namespace detail

/// Runs the measurement protocol: per degree, `trials` pseudorandom
/// fully-splitting instances, every selected algorithm on the same
/// instances, counts recorded per trial. The modulus search runs each
/// instance twice, once with corner exclusion (the mean columns) and once
/// without (the max column; the count is instance-independent and equals
/// predict_max_muls). Root sets are cross-checked between algorithms on
/// every trial, and against rough_search on every trial for n <= 10 (1% of
/// trials above that).
inline std::vector<BenchRow> run_bench(const BenchSpec& spec)
{
    const GaloisField field(spec.field_bits);
    const std::uint32_t m = field.order();
    if (spec.trials < 1)
        throw Error("trials must be at least 1");
    for (auto t : spec.degrees)
        if (t < 1 || t > m - 1)
            throw DegreeTooLarge("bench degree must be in [1, m-1], got " + std::to_string(t));

    const std::optional<CycleConfig> config = builtin_config(spec.field_bits);
    const bool applicable = config.has_value();
    const bool run_modulus = spec.algorithms.modulus && applicable;
    const bool run_premult = spec.algorithms.modulus_premultiplied && applicable;
    const std::optional<CycleConfig> premult_config =
        run_premult ? detail::two_level(*config, m) : std::nullopt;

    std::vector<BenchRow> rows;
    for (std::size_t row_idx = 0; row_idx < spec.degrees.size(); ++row_idx) {
        const std::uint32_t t = spec.degrees[row_idx];
        std::vector<detail::TrialRecord> records(spec.trials);

        auto run_trial = [&](std::uint32_t trial) {
            const std::uint64_t stream = (static_cast<std::uint64_t>(row_idx) << 32) | trial;
            SplitMix64 rng = trial_rng(spec.seed, stream);
            const Polynomial p = random_instance(field, t, rng);

            std::vector<SearchResult> results;
            if (spec.algorithms.chien)
                results.push_back(chien_search(field, p));
            if (spec.algorithms.chien_excluding)
                results.push_back(chien_search_excluding(field, p));
            if (run_modulus) {
                results.push_back(modulus_search(field, p, *config, true));
                results.push_back(modulus_search(field, p, *config, false));
            }
            if (run_premult)
                results.push_back(modulus_search_premultiplied(field, p, *premult_config));

            const bool verify_all = spec.field_bits <= 10;
            if (!results.empty() && (verify_all || trial % 100 == 0)) {
                const SearchResult oracle = rough_search(field, p);
                for (const auto& r : results)
                    if (!detail::same_roots(oracle, r))
                        throw Error("root-set mismatch against the direct scan (t=" +
                                    std::to_string(t) + ", trial " + std::to_string(trial) + ")");
            }
            for (std::size_t a = 1; a < results.size(); ++a)
                if (!detail::same_roots(results[0], results[a]))
                    throw Error("root-set mismatch between algorithms (t=" + std::to_string(t) +
                                ", trial " + std::to_string(trial) + ")");

            detail::TrialRecord rec;
            std::size_t idx = 0;
            if (spec.algorithms.chien)
                rec.chien_muls = results[idx++].counter.muls;
            if (spec.algorithms.chien_excluding)
                ++idx;
            if (run_modulus) {
                rec.modulus_muls = results[idx].counter.muls;
                rec.modulus_adds = results[idx].counter.adds;
                rec.modulus_max_muls = results[idx + 1].counter.muls;
            }
            records[trial] = rec;
        };

        const unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, spec.trials));
        if (jobs == 1) {
            for (std::uint32_t trial = 0; trial < spec.trials; ++trial)
                run_trial(trial);
        } else {
            std::vector<std::thread> workers;
            std::vector<std::exception_ptr> errors(jobs);
            for (unsigned w = 0; w < jobs; ++w) {
                workers.emplace_back([&, w] {
                    try {
                        for (std::uint32_t trial = w; trial < spec.trials; trial += jobs)
                            run_trial(trial);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& th : workers)
                th.join();
            for (auto& e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        BenchRow row;
        row.t = t;
        row.chien_muls = spec.algorithms.chien
                             ? records[0].chien_muls
                             : static_cast<std::uint64_t>(m - 1) * t;
        row.modulus_applicable = run_modulus;
        if (run_modulus) {
            row.predicted_max_muls = predict_max_muls(*config, t);
            std::uint64_t sum_muls = 0;
            std::uint64_t sum_adds = 0;
            for (const auto& rec : records) {
                row.max_muls = std::max(row.max_muls, rec.modulus_muls);
                sum_muls += rec.modulus_muls;
                sum_adds += rec.modulus_adds;
            }
            row.mean_muls = static_cast<double>(sum_muls) / spec.trials;
            row.mean_adds = static_cast<double>(sum_adds) / spec.trials;
            row.speedup = static_cast<double>(row.chien_muls) / row.mean_muls;
        }
        rows.push_back(row);
    }
    return rows;
}

enum class TableFormat { csv, markdown };

/// Deterministic, byte-stable table output. Mean columns are rounded to the
/// nearest integer; speedup is printed to two decimals. Markdown adds the
/// predicted max column so the observed and structural maxima sit side by
/// side.
inline std::string emit_table(std::span<const BenchRow> rows, TableFormat format)
{
    std::string out;
    char buf[160];
    if (format == TableFormat::csv) {
        out += "t,chien_muls,max_muls,mean_muls,mean_adds,speedup\n";
        for (const auto& r : rows) {
            if (r.modulus_applicable) {
                std::snprintf(buf, sizeof buf, "%u,%llu,%llu,%llu,%llu,%.2f\n", r.t,
                              static_cast<unsigned long long>(r.chien_muls),
                              static_cast<unsigned long long>(r.max_muls),
                              static_cast<unsigned long long>(std::llround(r.mean_muls)),
                              static_cast<unsigned long long>(std::llround(r.mean_adds)),
                              r.speedup);
            } else {
                std::snprintf(buf, sizeof buf, "%u,%llu,n/a,n/a,n/a,n/a\n", r.t,
                              static_cast<unsigned long long>(r.chien_muls));
            }
            out += buf;
        }
        return out;
    }
    out += "| t | chien muls | max muls | mean muls | mean adds | speedup | predicted max |\n";
    out += "| ---: | ---: | ---: | ---: | ---: | ---: | ---: |\n";
    for (const auto& r : rows) {
        if (r.modulus_applicable) {
            std::snprintf(buf, sizeof buf, "| %u | %llu | %llu | %llu | %llu | %.2f | %llu |\n",
                          r.t, static_cast<unsigned long long>(r.chien_muls),
                          static_cast<unsigned long long>(r.max_muls),
                          static_cast<unsigned long long>(std::llround(r.mean_muls)),
                          static_cast<unsigned long long>(std::llround(r.mean_adds)), r.speedup,
                          static_cast<unsigned long long>(r.predicted_max_muls));
        } else {
            std::snprintf(buf, sizeof buf, "| %u | %llu | n/a | n/a | n/a | n/a | n/a |\n", r.t,
                          static_cast<unsigned long long>(r.chien_muls));
        }
        out += buf;
    }
    return out;
}

} // namespace gfroots

#endif
