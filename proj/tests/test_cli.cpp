#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include <json.hpp>

#ifndef HCN_CLI_PATH
#error "HCN_CLI_PATH must point at the hcn binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HCN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_cache() {
    return (std::filesystem::temp_directory_path() /
            ("hcn_cli_cache_" + std::to_string(::getpid()) + ".tbl"))
        .string();
}

} // namespace

TEST_CASE("cli: hurwitz") {
    const RunResult r = run_cli("hurwitz 12");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4/3\n");
    CHECK(run_cli("hurwitz 0").out == "-1/12\n");
}

TEST_CASE("cli: table csv rows store 12*H") {
    const RunResult r = run_cli("table --max 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,-1\n1,0\n2,0\n3,4\n4,6\n");
}

TEST_CASE("cli: classsum") {
    const RunResult r = run_cli("classsum --a 1 --p 5 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "23/12\n");
}

TEST_CASE("cli: verify is certified and machine readable") {
    const RunResult r = run_cli("verify p5_a0 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["identity_id"] == "p5_a0");
    CHECK(j["bound_used"] == 20);
    CHECK(j["certified"] == true);
    CHECK(j["first_mismatch"].is_null());
    CHECK(j["coefficients_checked"] == 20);

    const RunResult plain = run_cli("verify p3");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out.find("certified") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run_cli("verify p3 --bound 0").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify no_such_identity").exit_code == 2);
    CHECK(run_cli("classsum --a 0 --p 4 --n 3").exit_code == 2);
    CHECK(run_cli("series bogus:1,2 --prec 5").exit_code == 2);
    CHECK(run_cli("table --max 10 --format yaml").exit_code == 2);
}

TEST_CASE("cli: eichler plain line format") {
    const RunResult r = run_cli("eichler --max-prime 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3: 6 == 6 OK\n5: 10 == 10 OK\n");
}

TEST_CASE("cli: series dumps") {
    const RunResult r = run_cli("series theta:0,1 --prec 5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,1,1\n1,2,1\n2,0,1\n3,0,1\n4,2,1\n");
    const RunResult j = run_cli("series H --prec 4 --format json");
    CHECK(j.exit_code == 0);
    CHECK(j.out == "[\"-1/12\",\"0\",\"0\",\"1/3\"]\n");

    // class-sum series: H_{0,3}(4) = H(16) + 2 H(7) = 7/2, zero at 3 | n
    const RunResult lhs = run_cli("series lhs:0,3 --prec 5 --format csv");
    CHECK(lhs.exit_code == 0);
    CHECK(lhs.out == "0,0,1\n1,1,2\n2,1,1\n3,0,1\n4,7,2\n");
}

TEST_CASE("cli: identical invocations are byte-identical") {
    const std::string args = "conjectures --p 5 --max-prime 400 --format json";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli: cache file round trip and corruption") {
    const std::string cache = temp_cache();
    const RunResult r1 = run_cli("table --max 50 --cache " + cache + " --format csv");
    CHECK(r1.exit_code == 0);
    REQUIRE(std::filesystem::exists(cache));

    // second run reads the cache and prints the same bytes
    const RunResult r2 = run_cli("table --max 50 --cache " + cache + " --format csv");
    CHECK(r2.out == r1.out);

    // auto-extension on demand
    const RunResult r3 = run_cli("eichler --max-prime 40 --cache " + cache);
    CHECK(r3.exit_code == 0);

    std::ofstream(cache) << "HURWITZ-12H v1 max=2\n-1\n0\nnope\n";
    CHECK(run_cli("table --max 2 --cache " + cache).exit_code == 2);
    CHECK(run_cli("table --max 2 --cache " + cache + " --no-cache").exit_code == 0);
    std::filesystem::remove(cache);
}

TEST_CASE("cli: scan output") {
    const RunResult r = run_cli("scan --a 1 --p 5 --L 4 --max-prime 500 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["c1"] == "5/12");
    CHECK(j["c2"] == "5/12");
    CHECK(j["affine"] == true);
}

TEST_CASE("cli: dmz exit reflects the check") {
    CHECK(run_cli("dmz --prec 50").exit_code == 0);
}

TEST_CASE("cli: help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}
