#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "elliptic/fixtures.hpp"
#include "elliptic/graphic_io.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = elliptic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::filesystem::path(ELLIPTIC_GOLDEN_DIR) / name, std::ios::binary);
    REQUIRE(in);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tables match the golden files") {
    for (const char* which : {"lens", "elliptic", "klein-isom", "orbifold", "diff"}) {
        CAPTURE(which);
        auto r = run({"tables", "--which", which});
        CHECK(r.code == 0);
        CHECK(r.out == golden(std::string("tables_") + which + ".tsv"));
        CHECK(run({"tables", "--which", which}).out == r.out);
    }
    CHECK(run({"tables", "--which", "nope"}).code == 2);
}

TEST_CASE("invariants") {
    auto r = run({"invariants", "lens", "5", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("(S¹⋊̃S¹)∘C₄") != std::string::npos);
    CHECK(r.out.find("C₄") != std::string::npos);
    CHECK(r.out.find("P₄×S¹×S¹×ℝ^∞") != std::string::npos);
    CHECK(r.out.find("k=5") != std::string::npos);
    CHECK(run({"invariants", "klein", "3", "2"}).code == 0);
    CHECK(run({"invariants", "lens", "6", "2"}).code == 2);
    CHECK(run({"invariants", "klein", "2", "4"}).code == 2);
    CHECK(run({"invariants", "lens", "five", "2"}).code == 2);
}

TEST_CASE("usage errors") {
    auto r = run({"frobnicate"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    CHECK(run({}).code == 2);
    CHECK(run({"pi1", "0", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("pi1") {
    auto r = run({"pi1", "3", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("24") != std::string::npos);
    auto c = run({"pi1", "2", "1", "--cayley"});
    CHECK(c.code == 0);
    CHECK(c.out.size() > r.out.size());
}

TEST_CASE("curves") {
    CHECK(run({"curves", "meridian", "klein", "2", "3", "2", "3"}).code == 0);
    auto b = run({"curves", "bilongitude", "5", "1"});
    CHECK(b.code == 0);
    CHECK(b.out.find("(1,0)") != std::string::npos);
    auto c = run({"curves", "classify", "lens", "5", "2", "2", "1"});
    CHECK(c.code == 0);
    CHECK(c.out.find("V-cored") != std::string::npos);
    auto both = run({"curves", "classify", "lens", "5", "1", "0", "1"});
    CHECK(both.out.find("W-cored") != std::string::npos);
    CHECK(run({"curves", "bilongitude", "2", "1"}).code == 2);
    CHECK(run({"curves", "fibers", "1", "1"}).code == 0);
}

TEST_CASE("euler") {
    auto s = run({"euler", "spine", "3", "0", "1", "1"});
    CHECK(s.code == 0);
    CHECK(s.out.find("feasible\tno") != std::string::npos);
    CHECK(run({"euler", "circles", "1", "1", "1", "1", "1"}).code == 0);
    CHECK(run({"euler", "faces", "4", "8", "4", "4"}).code == 0);
    CHECK(run({"euler", "spine", "1", "0", "1", "1"}).code == 2);
}

TEST_CASE("graphic demos match the golden files") {
    auto morse = run({"graphic", "demo", "morse"});
    CHECK(morse.code == 0);
    CHECK(morse.out.rfind("GoodRegionsFound: 1 region", 0) == 0);
    CHECK(morse.out == golden("graphic_demo_morse.txt"));
    auto collapsed = run({"graphic", "demo", "collapsed"});
    CHECK(collapsed.code == 0);
    CHECK(collapsed.out == golden("graphic_demo_collapsed.txt"));
    for (const char* name : {"morse", "collapsed"}) {
        auto e = run({"graphic", "export", name});
        CHECK(e.out == golden(std::string("graphic_") + name + ".json"));
    }
}

TEST_CASE("graphic check reads files") {
    auto p = std::filesystem::path(ELLIPTIC_GOLDEN_DIR) / "graphic_morse.json";
    auto r = run({"graphic", "check", p.string(), "--eps", "1/20", "--strong"});
    CHECK(r.code == 0);
    CHECK(r.out == run({"graphic", "demo", "morse", "--eps", "1/20", "--strong"}).out);
    auto broken = temp_file("elliptic_cli_broken.json", "{\"vertices\": []");
    CHECK(run({"graphic", "check", broken.string()}).code == 2);
    CHECK(run({"graphic", "check", "/nonexistent/graphic.json"}).code == 2);
    CHECK(run({"graphic", "check", p.string(), "--eps", "0.05"}).code == 2);
    std::filesystem::remove(broken);
}

TEST_CASE("verify suites") {
    for (const char* suite : {"pi1", "free-action", "longitude", "bilongitude", "euler"}) {
        CAPTURE(suite);
        auto r = run({"verify", suite, "--max", "5"});
        CHECK(r.code == 0);
    }
    CHECK(run({"verify", "nothing"}).code == 2);
}

}  // TEST_SUITE
