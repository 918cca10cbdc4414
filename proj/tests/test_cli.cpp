#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qtk/macdonald.hpp"
#include "qtk/multipoly.hpp"

using namespace qtk;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + QTK_CLI_PATH " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_dir() {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() /
        ("qtk_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("partitions") {
    RunResult r = run("partitions 4");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
    RunResult j = run("partitions 4 --format json");
    CHECK(j.code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc.is_array());
    CHECK(doc.size() == 5);
    CHECK(doc[0] == "4");
}

TEST_CASE("kostka and fake-degree") {
    CHECK(run("kostka --lambda 2,1 --nu 1,1,1").out == "2\n");
    CHECK(run("fake-degree --lambda 2,1").out == "z + z^2\n");
    CHECK(run("cocharge-kostka --lambda 3,1 --nu 2,2").out == "z\n");
    CHECK(run("cocharge-kostka --lambda 4 --nu 2,2").out == "1\n");
}

TEST_CASE("qt-kostka table output re-parses to the library table") {
    RunResult r = run("qt-kostka --mu 2,2");
    CHECK(r.code == 0);
    CHECK(r.out.find("3,1: q + t + q*t") != std::string::npos);
    CHECK(r.out.find("2,2: q^2 + t^2") != std::string::npos);
    const QtKostkaTable& table = qt_kostka(Partition::parse("2,2"));
    std::istringstream lines(r.out);
    std::string line;
    int seen = 0;
    while (std::getline(lines, line)) {
        std::size_t colon = line.find(": ");
        REQUIRE(colon != std::string::npos);
        Partition lambda = Partition::parse(line.substr(0, colon));
        MultiPoly poly = MultiPoly::parse(line.substr(colon + 2));
        CHECK(table.entries.at(lambda) == poly);
        ++seen;
    }
    CHECK(seen == 5);
}

TEST_CASE("hl-kostka") {
    RunResult r = run("hl-kostka --nu 2,2");
    CHECK(r.code == 0);
    CHECK(r.out.find("4: 1") != std::string::npos);
    CHECK(r.out.find("2,2: z^2") != std::string::npos);
}

TEST_CASE("csp-verify worked example") {
    RunResult r = run("csp-verify --kind content3 -m 2 -n 2 --nu 2,2 -a 1");
    CHECK(r.code == 0);
    CHECK(r.out.find("(0,1,1) count=4 eval=4 ok") != std::string::npos);
    CHECK(r.out.find("(0,0,1) count=0 eval=0 ok") != std::string::npos);
    CHECK(r.out.find("all_match: true") != std::string::npos);

    RunResult j = run("csp-verify --kind content3 -m 2 -n 2 --nu 2,2 -a 1 --format json");
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["all_match"] == true);
    CHECK(doc["records"].size() == 8);
}

TEST_CASE("csp-poly reduced") {
    RunResult r = run("csp-poly --kind content3 -m 2 -n 2 --nu 2,2 -a 1 --reduced");
    CHECK(r.code == 0);
    CHECK(r.out == "3 + q*z + t*z + q*t*z\n");
}

TEST_CASE("gh-hilbert") {
    RunResult r = run("gh-hilbert --mu 2,1 --crosscheck");
    CHECK(r.code == 0);
    CHECK(r.out.find("total: 6") != std::string::npos);
    CHECK(r.out.find("crosscheck: both") != std::string::npos);
    RunResult rs = run("gh-hilbert --mu 2");
    CHECK(rs.out.find("(0,0): 1") != std::string::npos);
    CHECK(rs.out.find("(1,0): 1") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("no-such-command").code == 2);
    CHECK(run("kostka --lambda 2,1").code == 2);
    CHECK(run("kostka --lambda 2,1 --nu 2,2").code == 2);  // size mismatch
    CHECK(run("csp-verify --kind content3 -m 2 -n 2 --nu 2,1,1 -a 2").code == 2);
    CHECK(run("csp-verify --kind rect3 -m 3 -n 3").code == 2);  // size bound
    CHECK(run("qt-kostka --mu 1,2").code == 2);  // not weakly decreasing
}

TEST_CASE("cache reuse is byte-identical") {
    std::filesystem::path dir = temp_dir();
    std::filesystem::path cache = dir / "tables.json";
    std::filesystem::remove(cache);

    RunResult plain = run("qt-kostka --mu 3,1");
    RunResult cold = run("qt-kostka --mu 3,1 --cache " + cache.string());
    REQUIRE(std::filesystem::exists(cache));
    RunResult warm = run("qt-kostka --mu 3,1 --cache " + cache.string());
    CHECK(cold.code == 0);
    CHECK(warm.code == 0);
    CHECK(cold.out == plain.out);
    CHECK(warm.out == plain.out);

    std::ifstream in(cache);
    nlohmann::json doc = nlohmann::json::parse(in);
    CHECK(doc["format_version"] == "qtk-cache-v1");
    CHECK(doc["entries"].contains("3,1"));

    // environment variable form
    std::filesystem::path env_cache = dir / "env_tables.json";
    RunResult env_run = run("qt-kostka --mu 2,1", "QTK_CACHE=" + env_cache.string());
    CHECK(env_run.code == 0);
    CHECK(env_run.out == run("qt-kostka --mu 2,1").out);
    CHECK(std::filesystem::exists(env_cache));

    // stale format versions are ignored and rewritten
    std::filesystem::path stale = dir / "stale.json";
    {
        std::ofstream out(stale);
        out << "{\"format_version\":\"qtk-cache-v0\",\"entries\":{\"2\":{}}}";
    }
    RunResult after_stale = run("qt-kostka --mu 2 --cache " + stale.string());
    CHECK(after_stale.code == 0);
    CHECK(after_stale.out == run("qt-kostka --mu 2").out);
}

TEST_CASE("a poisoned cache drives csp-verify to the mismatch exit code") {
    std::filesystem::path dir = temp_dir();
    std::filesystem::path bad = dir / "poisoned.json";
    {
        // wrong table for mu = (2): K[(1,1)] = q instead of t
        std::ofstream out(bad);
        out << R"({"format_version":"qtk-cache-v1","entries":{"2":{)"
            << R"("2":[["1",[0,0,0,0]]],"1,1":[["1",[1,0,0,0]]]}}})";
    }
    RunResult r = run("csp-verify --kind rect3 -m 2 -n 1 --cache " + bad.string());
    CHECK(r.code == 3);
    CHECK(r.out.find("MISMATCH") != std::string::npos);
    CHECK(r.out.find("all_match: false") != std::string::npos);
}

TEST_CASE("selftest at a small bound") {
    RunResult r = run("selftest --max-n 3 --max-cells 3 --max-gh 3 --trials 8");
    CHECK(r.code == 0);
    CHECK(r.out.find("selftest: all checks passed") != std::string::npos);
}
