#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<const char*> args) {
    args.insert(args.begin(), "pantsgraph");
    std::ostringstream out, err;
    const int code = pantsgraph::cli::run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("build stats") {
    const auto r = run({"build", "zn", "--n", "6", "--stats"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"vertices\":14,\"edges\":21}\n");
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"build"}).code == 2);
    CHECK(run({"build", "zn", "--bogus"}).code == 2);
    CHECK(run({"build", "zz"}).code == 2);
    CHECK(run({"build", "x5", "--n", "6"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget") {
    const auto r = run({"exhaust", "--n", "5", "--steps", "50"});
    CHECK(r.code == 3);
    CHECK(r.err.find("budget") != std::string::npos);
    CHECK(run({"exhaust", "--n", "5", "--steps", "1", "--budget", "10"}).code == 3);
    const auto ok = run({"exhaust", "--n", "5", "--steps", "1", "--stats"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "[{\"stage\":1,\"vertices\":25,\"edges\":55},{\"stage\":2,\"vertices\":95,\"edges\":245}]\n");
}

TEST_CASE("verify is deterministic") {
    const auto a = run({"verify", "all", "--n", "5", "--seed", "7"});
    const auto b = run({"verify", "all", "--n", "5", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"seed\": 7") != std::string::npos);
    CHECK(run({"verify", "restriction-iso", "--n", "7", "--alpha", "1,4"}).code == 1);
    CHECK(run({"verify", "restriction-iso", "--n", "7"}).code == 2);
}

TEST_CASE("other commands") {
    CHECK(run({"farey-exhaust", "--steps", "2", "--stats"}).out ==
          "[{\"stage\":1,\"vertices\":3,\"edges\":3,\"triangles\":1},{\"stage\":2,\"vertices\":6,\"edges\":9,"
          "\"triangles\":4},{\"stage\":3,\"vertices\":12,\"edges\":21,\"triangles\":10}]\n");
    const auto dot = run({"export", "zn", "--n", "5"});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("graph zn {", 0) == 0);
    const auto st = run({"stats", "x5", "--n", "5"});
    CHECK(st.out.find("\"vertices\":25") != std::string::npos);
    CHECK(run({"orbit-check", "--n", "5", "--trials", "20"}).code == 0);
    CHECK(run({"normalize", "vertex", "--in", "/nonexistent.json"}).code == 2);
}
