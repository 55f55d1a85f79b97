#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

/// Runs the tool with `args`, stderr discarded.
Run run(const std::string & args)
{
    const std::string cmd = std::string(SMINOR_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE * pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string & name, const std::string & text)
{
    auto p = std::filesystem::temp_directory_path() / ("sminor_cli_" + name);
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST_CASE("gen and chi")
{
    auto s3 = run("gen S --r 3");
    REQUIRE(s3.code == 0);
    CHECK(nlohmann::json::parse(s3.out)["n"] == 7);

    auto s4 = temp_file("s4.json", run("gen S --r 4").out);
    auto chi = run("chi -i " + s4.string());
    REQUIRE(chi.code == 0);
    CHECK(nlohmann::json::parse(chi.out)["chi"] == 4);

    auto dot = run("gen D --k 1 --dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph {", 0) == 0);
}

TEST_CASE("identical arguments give identical output")
{
    const std::string args = "experiment random-tournament --n 16 --trials 4 --seed 11";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run("gen random-tournament --n 20 --seed 5").out == run("gen random-tournament --n 20 --seed 5").out);
}

TEST_CASE("found witnesses verify through the verify subcommand")
{
    auto g = temp_file("t.json", run("gen random-tournament --n 18 --seed 3").out);
    auto found = run("find-minor peel -i " + g.string());
    REQUIRE(found.code == 0);
    auto w = temp_file("w.json", nlohmann::json::parse(found.out)["witness"].dump());
    CHECK(run("verify --digraph " + g.string() + " --witness " + w.string()).code == 0);
}

TEST_CASE("exit codes")
{
    auto c3 = temp_file("c3.json", "{\"n\":3,\"edges\":[[0,1],[1,2],[2,0]]}");
    auto bad = temp_file("bad.json", "{\"kind\":\"strong-minor\",\"payload\":{\"branch_sets\":[[0],[1]]}}");
    CHECK(run("verify --digraph " + c3.string() + " --witness " + bad.string()).code == 2);

    auto s5 = temp_file("s5.json", run("gen S --r 5").out);
    CHECK(run("chi -i " + s5.string() + " --budget 3").code == 3);

    CHECK(run("chi --no-such-flag").code == 64);
    CHECK(run("gen random-tournament --n 5").code == 64);

    auto loop = temp_file("loop.json", "{\"n\":2,\"edges\":[[0,0]]}");
    CHECK(run("chi -i " + loop.string()).code == 65);
}
