// Command-line front end: root finding, operation-count benchmarks, cycle
// configuration inspection, and the cost predictor.
//
// Exit codes: 0 success, 2 usage/parse error, 3 method not applicable
// (prime group order).

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include <CLI11.hpp>

#include "gfroots/gfroots.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotApplicable = 3;

bool file_exists(const std::string& path)
{
    struct stat st{};
    return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode);
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const char* what)
{
    std::vector<std::uint32_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const unsigned long v = std::stoul(item, &pos);
            if (pos != item.size() || v == 0 || v > 0xffffffffUL)
                throw std::invalid_argument(item);
            values.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw gfroots::ParseError(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    if (values.empty())
        throw gfroots::ParseError(std::string("empty ") + what + " list");
    return values;
}

int cmd_find_roots(unsigned field_bits, bool field_given, const std::string& poly_arg,
                   const std::string& algorithm, bool counts)
{
    unsigned bits = field_bits;
    gfroots::Polynomial poly;
    if (file_exists(poly_arg)) {
        std::ifstream in(poly_arg);
        std::stringstream buf;
        buf << in.rdbuf();
        gfroots::PolyFile pf = gfroots::polynomial_from_json(buf.str());
        if (field_given && pf.field_bits != field_bits)
            throw gfroots::ParseError("--field " + std::to_string(field_bits) +
                                      " does not match field_bits " +
                                      std::to_string(pf.field_bits) + " in " + poly_arg);
        bits = pf.field_bits;
        poly = pf.poly;
    } else {
        if (!field_given)
            throw gfroots::ParseError("--field is required with an inline polynomial");
        poly = gfroots::polynomial_from_inline(poly_arg, bits);
    }

    const gfroots::GaloisField field(bits);
    gfroots::SearchResult result;
    if (algorithm == "rough") {
        result = gfroots::rough_search(field, poly);
    } else if (algorithm == "chien") {
        result = gfroots::chien_search(field, poly);
    } else if (algorithm == "chien-x") {
        result = gfroots::chien_search_excluding(field, poly);
    } else if (algorithm == "modulus") {
        const auto config = gfroots::builtin_config(bits);
        if (!config) {
            std::cerr << "group order " << field.order()
                      << " is prime; modulus search not applicable\n";
            return kExitNotApplicable;
        }
        result = gfroots::modulus_search(field, poly, *config);
    } else {
        throw gfroots::ParseError("unknown algorithm '" + algorithm + "'");
    }

    if (result.zero_root_multiplicity > 0)
        std::cout << gfroots::element_hex(0, bits) << " x^" << result.zero_root_multiplicity
                  << "\n";
    for (gfroots::GfElement r : result.roots)
        std::cout << gfroots::element_hex(r, bits) << " alpha^" << field.log(r) << "\n";
    if (counts)
        std::cout << "muls=" << result.counter.muls << " adds=" << result.counter.adds << "\n";
    return kExitOk;
}

gfroots::AlgorithmSet parse_algorithms(const std::string& text)
{
    gfroots::AlgorithmSet set{false, false, false, false};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "chien")
            set.chien = true;
        else if (item == "chien-x")
            set.chien_excluding = true;
        else if (item == "modulus")
            set.modulus = true;
        else if (item == "modulus-pre")
            set.modulus_premultiplied = true;
        else
            throw gfroots::ParseError("unknown algorithm '" + item + "'");
    }
    if (!set.chien && !set.chien_excluding && !set.modulus && !set.modulus_premultiplied)
        throw gfroots::ParseError("empty algorithm list");
    return set;
}

int cmd_bench(unsigned field_bits, const std::string& degrees, std::uint32_t trials,
              std::uint64_t seed, const std::string& format, const std::string& out_path,
              unsigned jobs, const std::string& algorithms)
{
    gfroots::BenchSpec spec;
    spec.field_bits = field_bits;
    spec.degrees = parse_uint_list(degrees, "degree");
    spec.trials = trials;
    spec.seed = seed;
    spec.jobs = jobs;
    spec.algorithms = parse_algorithms(algorithms);

    gfroots::TableFormat fmt;
    if (format == "csv")
        fmt = gfroots::TableFormat::csv;
    else if (format == "markdown")
        fmt = gfroots::TableFormat::markdown;
    else
        throw gfroots::ParseError("unknown format '" + format + "'");

    const auto rows = gfroots::run_bench(spec);
    const std::string table = gfroots::emit_table(rows, fmt);
    if (out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw gfroots::Error("cannot open output file " + out_path);
        out << table;
    }
    return kExitOk;
}

int cmd_config(unsigned field_bits)
{
    const gfroots::GaloisField field(field_bits);
    const auto config = gfroots::builtin_config(field_bits);
    if (!config) {
        std::cerr << "group order " << field.order()
                  << " is prime; modulus search not applicable\n";
        return kExitNotApplicable;
    }
    std::cout << field.order() << " =";
    for (std::size_t i = 0; i < config->factors.size(); ++i)
        std::cout << (i == 0 ? " " : " x ") << config->factors[i];
    std::cout << "; scales:";
    const auto strides = config->strides();
    for (std::size_t i = 0; i < strides.size(); ++i)
        std::cout << (i == 0 ? " " : ", ") << "alpha^" << strides[i];
    if (config->derived)
        std::cout << " (derived)";
    std::cout << "\n";
    return kExitOk;
}

int cmd_predict(unsigned field_bits, std::uint32_t degree)
{
    const gfroots::GaloisField field(field_bits);
    const std::uint64_t chien = static_cast<std::uint64_t>(field.order() - 1) * degree;
    const auto config = gfroots::builtin_config(field_bits);
    if (!config) {
        std::cerr << "group order " << field.order()
                  << " is prime; modulus search not applicable (chien " << chien << ")\n";
        return kExitNotApplicable;
    }
    std::cout << "modulus " << gfroots::predict_max_muls(*config, degree) << ", chien " << chien
              << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Root finding over GF(2^n) with operation-count instrumentation"};
    app.require_subcommand(1);

    unsigned field_bits = 0;
    std::string poly_arg;
    std::string algorithm = "modulus";
    bool counts = false;
    auto* find = app.add_subcommand("find-roots", "Find the roots of a polynomial");
    auto* field_opt = find->add_option("--field", field_bits, "Field bit width n (4..16)")
                          ->check(CLI::Range(4u, 16u));
    find->add_option("--poly", poly_arg, "Polynomial JSON file or inline hex 'c0,c1,...'")
        ->required();
    find->add_option("--algorithm", algorithm, "rough | chien | chien-x | modulus")
        ->capture_default_str();
    find->add_flag("--counts", counts, "Append the operation counts");

    unsigned bench_field = 0;
    std::string degrees;
    std::uint32_t trials = 1000;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out_path;
    unsigned jobs = 1;
    std::string algorithms = "chien,modulus";
    auto* bench = app.add_subcommand("bench", "Operation-count benchmark over random instances");
    bench->add_option("--field", bench_field, "Field bit width n (4..16)")
        ->required()
        ->check(CLI::Range(4u, 16u));
    bench->add_option("--degrees", degrees, "Comma-separated degree list, e.g. 10,20")->required();
    bench->add_option("--trials", trials, "Trials per degree")->capture_default_str();
    bench->add_option("--seed", seed, "RNG seed")->capture_default_str();
    bench->add_option("--format", format, "csv | markdown")->capture_default_str();
    bench->add_option("--out", out_path, "Write the table to a file instead of stdout");
    bench->add_option("--jobs", jobs, "Worker threads for trials")->capture_default_str();
    bench->add_option("--algorithms", algorithms, "Subset of chien,chien-x,modulus,modulus-pre")
        ->capture_default_str();

    unsigned config_field = 0;
    auto* config = app.add_subcommand("config", "Show the cycle configuration for a field");
    config->add_option("--field", config_field, "Field bit width n (4..16)")
        ->required()
        ->check(CLI::Range(4u, 16u));

    unsigned predict_field = 0;
    std::uint32_t predict_degree = 0;
    auto* predict = app.add_subcommand("predict", "Predicted multiplication counts for a degree");
    predict->add_option("--field", predict_field, "Field bit width n (4..16)")
        ->required()
        ->check(CLI::Range(4u, 16u));
    predict->add_option("--degree", predict_degree, "Polynomial degree t")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (find->parsed())
            return cmd_find_roots(field_bits, field_opt->count() > 0, poly_arg, algorithm, counts);
        if (bench->parsed())
            return cmd_bench(bench_field, degrees, trials, seed, format, out_path, jobs,
                             algorithms);
        if (config->parsed())
            return cmd_config(config_field);
        if (predict->parsed())
            return cmd_predict(predict_field, predict_degree);
    } catch (const gfroots::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
