#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "voa/registry.hpp"
#include "voa/spec_json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(VOACALC_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::filesystem::path fixture_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "voacalc_cli_fixtures";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& text) {
    const auto path = fixture_dir() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

}  // namespace

TEST_CASE("rank queries") {
    auto fib = run_cli("rank --voa virasoro:2,5 --ins Wmin^6 --genus 0");
    CHECK(fib.exit_code == 0);
    CHECK(fib.output == "5\n");

    // Pointed file: x^5 at genus 2 gives |G|^2.
    const std::string z5 = write_fixture("z5.json", voa::save_spec(voa::pointed(voa::root_lattice_ar(4))));
    auto pointed = run_cli("rank --voa pointed:" + z5 + " --ins x^5 --genus 2");
    CHECK(pointed.exit_code == 0);
    CHECK(pointed.output == "25\n");

    auto json = run_cli("rank --voa virasoro:2,5 --ins Wmin^6 --genus 0 --json");
    CHECK(json.exit_code == 0);
    CHECK(nlohmann::json::parse(json.output)["rank"] == "5");
}

TEST_CASE("exit codes: validation vs domain errors") {
    CHECK(run_cli("rank --voa nosuch:1 --ins V").exit_code == 2);
    CHECK(run_cli("rank --voa virasoro:2,5 --ins Bogus^2").exit_code == 2);
    CHECK(run_cli("rank --voa virasoro:2,4 --ins V").exit_code == 2);
    // (g,n) = (0,1) is unstable under --strict-stability.
    CHECK(run_cli("rank --voa virasoro:2,5 --ins V --genus 0 --strict-stability").exit_code == 3);
    CHECK(run_cli("rank --voa virasoro:2,5 --ins V --genus 1 --strict-stability").exit_code == 0);
}

TEST_CASE("output determinism and json/table parity") {
    const std::string cmd = "genfunc --voa virasoro:2,7 --step Wmin --genus 0 --coeffs 8";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("coefficients: 1 3 6 14 31 70 157 353") != std::string::npos);
    CHECK(a.output.find("verified against rank queries: ok") != std::string::npos);

    const auto j = run_cli(cmd + " --json");
    CHECK(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["verified"] == true);
    const auto coeffs = parsed["coefficients"];
    REQUIRE(coeffs.size() == 8);
    CHECK(coeffs[3] == "14/1");
}

TEST_CASE("genfunc with an explicit frame") {
    const auto out = run_cli("genfunc --voa virasoro:2,5 --step Wmin --frame W1,W1 --coeffs 5");
    CHECK(out.exit_code == 0);
    CHECK(out.output.find("coefficients: 3 5 8 13 21") != std::string::npos);
}

TEST_CASE("corrupted spec files are rejected with the invariant name") {
    voa::VoaSpec broken = voa::virasoro(2, 5);
    broken.set_s(1, 0, 1, 1);  // vacuum pairing violated
    const std::string path = write_fixture("broken.json", voa::save_spec(broken));
    CHECK(run_cli("rank --voa pointed:" + path + " --ins V").exit_code == 2);
    CHECK(run_cli("verify --voa pointed:" + path).exit_code == 2);
}

TEST_CASE("fa-matrix output") {
    const auto out = run_cli("fa-matrix --voa virasoro:2,5 --ins Wmin^2");
    CHECK(out.exit_code == 0);
    CHECK(out.output.find("2 1\n1 1\n") != std::string::npos);
}

TEST_CASE("registry json emits the spec schema verbatim") {
    const auto out = run_cli("registry --voa sl2:2 --json");
    CHECK(out.exit_code == 0);
    CHECK(out.output == voa::save_spec(voa::affine_sl2(2)));
    // And it loads back.
    CHECK(voa::load_spec(out.output).labels.size() == 3);

    CHECK(run_cli("registry").output.find("virasoro:p,q") != std::string::npos);
}

TEST_CASE("divisor command and checks") {
    const auto table = run_cli("divisor --voa virasoro:3,4 --ins [Wmax^4] --genus 0");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("degree on M04: 2/1") != std::string::npos);
    CHECK(table.output.find("F-nef on genus-0 quadripartitions: pass") != std::string::npos);

    const auto j = run_cli("divisor --voa virasoro:3,4 --ins [Wmax^4] --genus 0 --json");
    const auto parsed = nlohmann::json::parse(j.output);
    CHECK(parsed["g"] == 0);
    CHECK(parsed["n"] == 4);
    CHECK(parsed["b_irr"].is_null());
    REQUIRE(parsed["boundary"].size() == 3);
    CHECK(parsed["boundary"][0]["I"] == nlohmann::json::array({1, 2}));

    // Instability is a domain error.
    CHECK(run_cli("divisor --voa virasoro:3,4 --ins [Wmax^2] --genus 0").exit_code == 3);
}

TEST_CASE("nef report for lattice data") {
    const std::string a1 = write_fixture("ar1.json", voa::save_spec(voa::pointed(voa::root_lattice_ar(1))));
    const auto out = run_cli("nef --voa pointed:" + a1);
    CHECK(out.exit_code == 0);
    CHECK(out.output.find("type 1 F-curves: equivalent-fails") != std::string::npos);
    CHECK(out.output.find("padding exponent r0 at c_H = 8/1: 1") != std::string::npos);

    // Non-pointed input is a validation error.
    CHECK(run_cli("nef --voa virasoro:2,5").exit_code == 2);
}

TEST_CASE("verify aggregates suites and sets the exit code") {
    const auto ok = run_cli("verify --voa 'tensor:(virasoro:2,5,sl2:1)' --max-n 2 --max-g 1");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("PASS Kronecker product law") != std::string::npos);
    CHECK(ok.output.find("PASS rank multiplicativity") != std::string::npos);

    const std::string z2 =
        write_fixture("z2.json", voa::save_spec(voa::pointed(voa::root_lattice_ar(1))));
    const auto pointed_run = run_cli("verify --voa pointed:" + z2 + " --max-n 3 --max-g 2");
    CHECK(pointed_run.exit_code == 0);
    CHECK(pointed_run.output.find("PASS pointed rank law") != std::string::npos);
    CHECK(pointed_run.output.find("PASS pointed divisor closed form") != std::string::npos);
    CHECK(pointed_run.output.find("PASS order-two boundary parity") != std::string::npos);
}

TEST_CASE("fusion matrices persist through FA_RANK_CACHE_DIR") {
    const auto dir = std::filesystem::temp_directory_path() / "voacalc_cli_cache";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string env = "FA_RANK_CACHE_DIR=" + dir.string() + " ";
    const std::string cmd = std::string(VOACALC_BIN) +
                            " rank --voa virasoro:3,4 --ins Wmax^4 --genus 1 2>/dev/null";

    std::array<char, 256> buffer{};
    std::string first, second;
    FILE* p1 = popen((env + cmd).c_str(), "r");
    REQUIRE(p1 != nullptr);
    while (fgets(buffer.data(), buffer.size(), p1)) first += buffer.data();
    CHECK(WEXITSTATUS(pclose(p1)) == 0);

    int cache_files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".famc") ++cache_files;
    CHECK(cache_files == 1);

    FILE* p2 = popen((env + cmd).c_str(), "r");
    REQUIRE(p2 != nullptr);
    while (fgets(buffer.data(), buffer.size(), p2)) second += buffer.data();
    CHECK(WEXITSTATUS(pclose(p2)) == 0);
    CHECK(first == second);
    std::filesystem::remove_all(dir);
}
