#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const char* bin = std::getenv("MVCRYS_CLI");
    REQUIRE(bin != nullptr);
    Run r;
    FILE* pipe = popen((std::string(bin) + " " + args + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("crystal --type A --rank 1 --lambda 1 gives three nodes") {
    auto r = run("crystal --type A --rank 1 --lambda 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("nodes 3") != std::string::npos);
    CHECK(r.out.find("axiom violations 0") != std::string::npos);
}

TEST_CASE("cone for A3 prints the seven relations") {
    auto r = run("cone --type A --rank 3 --word 2,1,3,2,1,3");
    CHECK(r.status == 0);
    CHECK(count(r.out, "\n") == 7);
    for (const char* row : {"1 0 0 0 0 0", "0 1 0 0 0 -1", "0 0 0 0 0 1", "0 0 1 0 -1 0", "0 0 0 0 1 0",
                            "0 1 1 -1 0 0", "0 0 0 1 -1 -1"})
        CHECK(r.out.find(row) != std::string::npos);
}

TEST_CASE("mv-sample prints one row per trial and is reproducible") {
    const std::string args = "mv-sample --type A --rank 2 --word 1,2,1 --c 1,1,0 --trials 10 --seed 7 --prec 32";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == 0);
    CHECK(count(a.out, "trial ") == 10);
    CHECK(a.out == b.out);
    CHECK(a.out.find("expected mu+ (1,1)") != std::string::npos);
    auto cell = run("mv-sample --type A --rank 2 --lambda 1,1 --node 0 --trials 3");
    CHECK(cell.status == 0);
    CHECK(count(cell.out, "trial ") == 3);
}

TEST_CASE("string and trop") {
    auto s = run("string --type A --rank 2 --lambda 1,1 --word 1,2,1");
    CHECK(s.status == 0);
    CHECK(count(s.out, "\n") == 9);
    auto t = run("trop --type A --rank 1 --word 1 --m -2 --map f");
    CHECK(t.status == 0);
    CHECK(t.out.find("= (2)") != std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
    CHECK(run("crystal --type A --rank 2").status != 0);
    CHECK(run("crystal --type X --rank 2 --lambda 1,1").status != 0);
    CHECK(run("crystal --type A --rank 2 --lambda -1,1").status != 0);
    CHECK(run("mv-sample --type B --rank 2 --c 1,1,1,1").status != 0);
    CHECK(run("").status != 0);
}

TEST_CASE("verify exit status follows the criteria") {
    auto ok = run("verify --suite desk --only 1,2,10");
    CHECK(ok.status == 0);
    CHECK(count(ok.out, "PASS") == 3);
    auto four = run("verify --suite desk --only 4");
    CHECK(four.status == 1);
    CHECK(four.out.find("FAIL") != std::string::npos);
}
