#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "gfroots/gfroots.hpp"

using namespace gfroots;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args)
{
    const char* bin = std::getenv("GFROOTS_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("find-roots on x + 1", "[cli]")
{
    for (const char* algo : {"rough", "chien", "chien-x", "modulus"}) {
        const auto res =
            run_cli(std::string("find-roots --field 8 --poly 01,01 --algorithm ") + algo);
        REQUIRE(res.exit_code == 0);
        REQUIRE(res.out == "01 alpha^0\n");
    }
}

TEST_CASE("find-roots appends counts on request", "[cli]")
{
    const auto res = run_cli("find-roots --field 8 --poly 01,01 --algorithm chien --counts");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == "01 alpha^0\nmuls=254 adds=255\n");
}

TEST_CASE("find-roots reports the zero root", "[cli]")
{
    const auto res = run_cli("find-roots --field 8 --poly 00,01,01 --algorithm modulus");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == "00 x^1\n01 alpha^0\n");
}

TEST_CASE("modulus search is not applicable on GF(2^13)", "[cli]")
{
    CHECK(run_cli("find-roots --field 13 --poly 0001,0001 --algorithm modulus").exit_code == 3);
    CHECK(run_cli("config --field 13").exit_code == 3);
    CHECK(run_cli("predict --field 13 --degree 10").exit_code == 3);
    // chien still works there
    const auto res = run_cli("find-roots --field 13 --poly 0001,0001 --algorithm chien");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "0001 alpha^0\n");
}

TEST_CASE("find-roots reads the JSON polynomial file", "[cli]")
{
    GaloisField f(8);
    SplitMix64 rng = trial_rng(17, 0);
    const Polynomial p = random_instance(f, 10, rng);
    const std::string path = "/tmp/gfroots_cli_test_poly.json";
    {
        std::ofstream out(path);
        out << polynomial_to_json(8, p);
    }
    const auto res = run_cli("find-roots --poly " + path + " --algorithm modulus");
    REQUIRE(res.exit_code == 0);

    std::string expected;
    const auto oracle = rough_search(f, p);
    for (GfElement r : oracle.roots)
        expected += element_hex(r, 8) + " alpha^" + std::to_string(f.log(r)) + "\n";
    CHECK(res.out == expected);

    CHECK(run_cli("find-roots --field 12 --poly " + path).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("config prints the factor chain and scales", "[cli]")
{
    const auto res = run_cli("config --field 8");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == "255 = 17 x 5 x 3; scales: alpha^1, alpha^17, alpha^85\n");

    const auto derived = run_cli("config --field 4");
    REQUIRE(derived.exit_code == 0);
    CHECK(derived.out == "15 = 5 x 3; scales: alpha^1, alpha^5 (derived)\n");
}

TEST_CASE("predict prints both cost models", "[cli]")
{
    const auto res = run_cli("predict --field 8 --degree 100");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == "modulus 2892, chien 25400\n");

    const auto wide = run_cli("predict --field 16 --degree 10");
    REQUIRE(wide.exit_code == 0);
    CHECK(wide.out == "modulus 305820, chien 655340\n");
}

TEST_CASE("bench output is byte-stable", "[cli]")
{
    const std::string args = "bench --field 8 --degrees 5,9 --trials 3 --seed 7";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("t,chien_muls,max_muls,mean_muls,mean_adds,speedup\n", 0) == 0);

    const auto md = run_cli(args + " --format markdown");
    REQUIRE(md.exit_code == 0);
    CHECK(md.out.rfind("| t |", 0) == 0);
}

TEST_CASE("usage errors exit with 2", "[cli]")
{
    CHECK(run_cli("find-roots --field 8 --poly zz,01").exit_code == 2);
    CHECK(run_cli("find-roots --field 8 --poly 01,01 --algorithm nosuch").exit_code == 2);
    CHECK(run_cli("find-roots --poly 01,01").exit_code == 2); // inline needs --field
    CHECK(run_cli("bench --field 8 --degrees abc").exit_code == 2);
    CHECK(run_cli("bench --field 8 --degrees 0").exit_code == 2);
    CHECK(run_cli("bench --field 8 --degrees 10 --format nosuch").exit_code == 2);
    CHECK(run_cli("config --field 99").exit_code == 2);
    CHECK(run_cli("nosuch-subcommand").exit_code == 2);
}
