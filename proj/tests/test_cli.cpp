#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string outfile = std::string("/tmp/degsum_cli_out_") + std::to_string(::getpid());
    std::string cmd = std::string(DEGSUM_CLI_PATH) + " " + args + " > " + outfile + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(outfile);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(outfile.c_str());
    return {WEXITSTATUS(rc), ss.str()};
}

} // namespace

TEST_CASE("charsum subcommand prints exact values", "[cli]") {
    RunResult r = run_cli("charsum gl -n 3 -q 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("28") != std::string::npos);

    r = run_cli("charsum sym -n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("10") != std::string::npos);

    r = run_cli("charsum exc --family G2 -q 3 --bound");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("15309/2") != std::string::npos);  // q^8 + 3/2 q^6 as an exact rational

    r = run_cli("charsum 2f4 -q 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("4164538888224") != std::string::npos);
}

TEST_CASE("remaining charsum kinds", "[cli]") {
    CHECK(run_cli("charsum psl2 -q 9").out.find("46") != std::string::npos);
    CHECK(run_cli("charsum gu -n 3 -q 2").out.find("108") != std::string::npos);
    CHECK(run_cli("charsum go -n 2 -q 3").out.find("1784") != std::string::npos);
    CHECK(run_cli("charsum pgu3 -q 2").out.find("36") != std::string::npos);
    CHECK(run_cli("charsum pgl3 -q 2").out.find("28") != std::string::npos);
}

TEST_CASE("data dir override via environment", "[cli]") {
    RunResult r = run_cli("classify --data-dir /nonexistent-degsum-dir --max-n 5 --max-q 0 --sp4-max-q 0");
    CHECK(r.exit_code != 0);  // no expected list to be found there
}

TEST_CASE("verify --all covers the whole registry", "[cli]") {
    RunResult r = run_cli("verify --all --format json");
    CHECK(r.exit_code == 0);
    for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11"})
        CHECK(r.out.find(std::string("\"id\": \"") + id + "\"") != std::string::npos);
    CHECK(r.out.find("FAILS_AT") == std::string::npos);
    CHECK(r.out.find("UNDECIDED") == std::string::npos);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run_cli("charsum nosuch -n 1 -q 2").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("charsum gl -n 3 -q 6").exit_code == 2);  // not a prime power
}

TEST_CASE("verify exits 0 on expected outcomes including carve-outs", "[cli]") {
    RunResult r = run_cli("verify C4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("HOLDS") != std::string::npos);

    r = run_cli("verify C3 C5 --cells");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("F4(2)") != std::string::npos);

    CHECK(run_cli("verify C99").exit_code == 2);
}

TEST_CASE("verify json output is canonical", "[cli]") {
    RunResult a = run_cli("verify C4 C6 --format json");
    RunResult b = run_cli("verify C4 C6 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);  // byte-identical given identical config
    CHECK(a.out.find("\"tool\": \"degsum 1.0.0\"") != std::string::npos);
    CHECK(a.out.find("\"verdict\": \"HOLDS\"") != std::string::npos);

    RunResult c = run_cli("verify C4 --format csv");
    CHECK(c.exit_code == 0);
    CHECK(c.out.rfind("claim,point,outcome,expected,witness", 0) == 0);
}

TEST_CASE("classify against the bundled expected list", "[cli]") {
    RunResult r = run_cli("classify --max-n 10 --max-q 64 --sp4-max-q 3 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("expected list: MATCH") != std::string::npos);
    CHECK(r.out.find("Alt(5)") != std::string::npos);

    // byte-identical reports across runs
    RunResult j1 = run_cli("classify --max-n 8 --max-q 32 --sp4-max-q 3 --format json");
    RunResult j2 = run_cli("classify --max-n 8 --max-q 32 --sp4-max-q 3 --format json");
    CHECK(j1.exit_code == 0);
    CHECK(j1.out == j2.out);

    // resource caps exit 3
    CHECK(run_cli("classify --max-q 1000000").exit_code == 3);

    // an empty box matches trivially
    RunResult empty = run_cli("classify --max-n 0 --max-q 0 --sp4-max-q 0");
    CHECK(empty.exit_code == 0);
}

TEST_CASE("config file mirrors flags, flags win", "[cli]") {
    std::string cfg = std::string("/tmp/degsum_cfg_") + std::to_string(::getpid());
    {
        std::ofstream out(cfg);
        out << "[classify]\nmax-n=6\nmax-q=8\nsp4-max-q=0\n";
    }
    RunResult file_only = run_cli("--config " + cfg + " classify");
    CHECK(file_only.exit_code == 0);
    CHECK(file_only.out.find("Alt(6)") != std::string::npos);

    RunResult overridden = run_cli("--config " + cfg + " classify --max-n 5");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.out.find("Alt(6)") == std::string::npos);  // flag beats the file
    CHECK(overridden.out.find("Alt(5)") != std::string::npos);
    std::remove(cfg.c_str());
}

TEST_CASE("csv exception listing", "[cli]") {
    RunResult r = run_cli("classify --max-n 8 --max-q 16 --sp4-max-q 0 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("family,group,canonical,p,case,sigma,index", 0) == 0);
    CHECK(r.out.find("Alt(5),Alt(5),2,1,16,15") != std::string::npos);
}
