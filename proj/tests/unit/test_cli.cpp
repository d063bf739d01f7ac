#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args)
{
    std::string cmd = std::string(UVASS_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scratch(const std::string& name)
{
    fs::create_directories(UVASS_SCRATCH);
    return (fs::path(UVASS_SCRATCH) / name).string();
}

std::string write(const std::string& name, const std::string& text)
{
    std::string path = scratch(name);
    std::ofstream(path) << text;
    return path;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("validate")
{
    auto ok = run("validate " + write("loop.vass", "vass 1\ndim 0\nalphabet a\nstates q\ninitial q\nfinal q\ntrans q a q\n"));
    CHECK(ok.code == 0);
    json report = json::parse(ok.out);
    CHECK(report["verdict"]["valid"] == true);
    CHECK(report["input"]["digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);

    CHECK(run("validate " + write("arity.vass", "vass 1\ndim 2\nalphabet a\nstates q\ninitial q\nfinal q\ntrans q a 1 q\n")).code == 3);
    CHECK(run("validate " + write("eps.vass", "vass 1\ndim 0\nalphabet eps\nstates q\ninitial q\nfinal q\n")).code == 3);
    CHECK(run("validate " + scratch("missing.vass")).code == 3);
}

TEST_CASE("generate and check")
{
    std::string p11 = scratch("p11.vass");
    REQUIRE(run("generate partition --set 1,1 -o " + p11).code == 0);
    auto uni = run("check " + p11 + " universal");
    CHECK(uni.code == 1);
    CHECK(json::parse(uni.out)["witness"]["word"] == "01");

    std::string det = write("det.vass", "vass 1\ndim 0\nalphabet a b\nstates q\ninitial q\nfinal q\ntrans q a q\ntrans q b q\n");
    CHECK(run("check " + det + " unambiguous").code == 0);
    CHECK(run("check " + det + " universal").code == 0);
    CHECK(run("check " + det + " empty").code == 1);
    CHECK(run("check " + det + " member ab").code == 0);

    std::string p235 = scratch("p235.vass");
    REQUIRE(run("generate partition --set 2,3,5 -o " + p235).code == 0);
    CHECK(run("check " + p235 + " member 110").code == 1);
    CHECK(run("check " + p235 + " member 100").code == 0);

    std::string p12 = scratch("p12.vass");
    REQUIRE(run("generate partition --set 1,2 -o " + p12).code == 0);
    std::string dfa = write("all01.vass", "vass 1\ndim 0\nalphabet 0 1\nstates q\ninitial q\nfinal q\ntrans q 0 q\ntrans q 1 q\n");
    CHECK(run("check " + p12 + " equiv-regular " + dfa).code == 0);
    CHECK(run("check " + p11 + " equiv-regular " + dfa).code == 1);
}

TEST_CASE("generation is deterministic")
{
    for (const char* kind : {"partition --set 1,1", "partition-ambiguous --set 1,1", "random --states 2 --dim 1 --norm 1 --symbols 1 --seed 7"}) {
        std::string a = scratch("gen_a.vass"), b = scratch("gen_b.vass");
        REQUIRE(run(std::string("generate ") + kind + " -o " + a).code == 0);
        REQUIRE(run(std::string("generate ") + kind + " -o " + b).code == 0);
        CHECK(slurp(a) == slurp(b));
    }
    std::string net = write("net.vass", "vass 1\ndim 1\nalphabet t\nstates q p\ninitial q\nfinal\ntrans q t 1 p\n");
    std::string b = scratch("oca.vass");
    REQUIRE(run("generate bounded-oca --automaton " + net + " --bound 1 --target-state p --target-value 1 -o " + b).code == 0);
    CHECK(run("check " + b + " universal").code == 1);
    CHECK(run("check " + b + " unambiguous").code == 0);
    std::string u = scratch("unamb.vass");
    REQUIRE(run("generate unamb-variant --automaton " + net + " --bound 1 --target-state p --target-value 1 -o " + u).code == 0);
    CHECK(run("check " + u + " unambiguous").code == 1);

    std::string eps = write("epsonly.vass", "vass 1\ndim 0\nalphabet\nstates q\ninitial q\nfinal q\n");
    std::string wrap = scratch("wrap.vass");
    REQUIRE(run("generate empty-wrap --automaton " + eps + " --letter x -o " + wrap).code == 0);
    CHECK(run("check " + wrap + " universal").code == 0);
}

TEST_CASE("usage errors")
{
    CHECK(run("generate nonsense").code == 3);
    CHECK(run("generate partition --set ''").code == 3);
    CHECK(run("generate partition").code == 3);
    CHECK(run("frobnicate").code == 3);
    CHECK(run("").code == 3);
    std::string det = write("det2.vass", "vass 1\ndim 0\nalphabet a\nstates q\ninitial q\nfinal q\ntrans q a q\n");
    CHECK(run("check " + det + " colour").code == 3);
    CHECK(run("check " + det + " member b").code == 3);
}

TEST_CASE("oracle")
{
    std::string p11 = scratch("p11o.vass");
    REQUIRE(run("generate partition --set 1,1 -o " + p11).code == 0);
    auto u = run("oracle " + p11 + " universal --max-len 3");
    CHECK(u.code == 1);
    json r = json::parse(u.out);
    CHECK(r["verdict"]["agree"] == true);
    CHECK(r["witness"]["word"] == "01");

    std::string amb = scratch("amb.vass");
    REQUIRE(run("generate partition-ambiguous --set 1,1 -o " + amb).code == 0);
    CHECK(run("oracle " + amb + " unambiguous --max-len 2").code == 1);
    CHECK(run("oracle " + amb + " unambiguous --max-len 0").code == 0);
}

TEST_CASE("bounds")
{
    auto r = run("bounds --norm 1 --dim 1 --states 1");
    REQUIRE(r.code == 0);
    json b = json::parse(r.out);
    CHECK(b["verdict"]["A"] == "8");
    CHECK(b["verdict"]["omega"] == "4294967297");
    CHECK(run("bounds --norm 1 --dim 0 --states 1").code == 3);
}

TEST_CASE("reports are stable apart from wall time")
{
    std::string p11 = scratch("p11s.vass");
    REQUIRE(run("generate partition --set 1,1 -o " + p11).code == 0);
    json a = json::parse(run("check " + p11 + " universal").out);
    json b = json::parse(run("check " + p11 + " universal").out);
    a["stats"].erase("wall_ms");
    b["stats"].erase("wall_ms");
    CHECK(a == b);
}
