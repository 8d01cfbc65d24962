#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "torusforge/cli.hpp"

using namespace torusforge;
using testing::corpus;
using json = nlohmann::ordered_json;

namespace {

struct Run {
    int exit;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "torusforge");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("torusforge_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("validate") {
    auto r = run({"validate", corpus("n9.alg")});
    CHECK(r.exit == 0);
    CHECK(r.report()["valid"] == true);
    CHECK(r.report()["dim"] == 9);
    auto bad = temp_dir("validate") / "bad.alg";
    write_file(bad.string(), R"({"name": "t", "kind": "lie", "even_basis": ["e1", "e2", "e3"], "odd_basis": [], "brackets": [
        {"left": "e1", "right": "e2", "value": [["2/4", "e3"]]}]})");
    auto p = run({"validate", bad.string()});
    CHECK(p.exit == 2);
    CHECK(p.report()["error"]["code"] == "PARSE_ERROR");
}

TEST_CASE("dld exit codes") {
    auto r = run({"dld", corpus("n9.alg")});
    CHECK(r.exit == 1);
    auto j = r.report();
    CHECK(j["condition_i"]["pass"] == true);
    CHECK(j["condition_ii"]["pass"] == false);
    CHECK(j["condition_iii"]["pass"] == false);
    CHECK(run({"dld", corpus("filiform_model_8.alg")}).exit == 0);
}

TEST_CASE("extend prints the extension") {
    auto r = run({"extend", corpus("filiform_model_8.alg")});
    CHECK(r.exit == 0);
    auto a = parse_algebra(r.out);
    CHECK(a.dim() == 10);
    CHECK(center(a).dim() == 0);
}

TEST_CASE("cohomology") {
    auto r = run({"cohomology", corpus("r46_n8.alg"), "--degree", "1"});
    CHECK(r.exit == 0);
    CHECK(r.report()["dim"] == 0);
    auto missing = run({"cohomology", corpus("r46_n8.alg")});
    CHECK(missing.exit == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).exit == 2);
    CHECK(run({"frobnicate"}).exit == 2);
    CHECK(run({"validate", "/nonexistent/file.alg"}).exit == 2);
}

TEST_CASE("zero torus maps to a failed check") {
    // weights force alpha1 = alpha2 = 0
    auto path = temp_dir("zero_torus") / "z.alg";
    write_file(path.string(), R"({"name": "z", "kind": "lie", "even_basis": ["e1", "e2"], "odd_basis": [], "brackets": [
        {"left": "e1", "right": "e2", "value": [["1", "e1"], ["1", "e2"]]}]})");
    auto r = run({"extend", path.string()});
    CHECK(r.exit == 1);
    CHECK(r.report()["error"]["code"] == "ZERO_TORUS");
}

TEST_CASE("compare") {
    auto r = run({"compare", corpus("heisenberg3.alg"), corpus("abelian_3.alg")});
    CHECK(r.exit == 0);
    auto j = r.report();
    CHECK(j.dump().find("derived") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    for (const char* cmd : {"analyze", "der", "torus", "roots", "dld"}) {
        auto a = run({cmd, corpus("n9.alg")});
        auto b = run({cmd, corpus("n9.alg")});
        CAPTURE(cmd);
        CHECK(a.out == b.out);
        CHECK(a.exit == b.exit);
    }
}

TEST_CASE("output flag writes the report") {
    auto path = temp_dir("output") / "r.json";
    auto r = run({"torus", corpus("n9.alg"), "--output", path.string()});
    CHECK(r.exit == 0);
    auto j = json::parse(read_file(path.string()));
    CHECK(j["dim"] == 2);
}

TEST_CASE("batch mode keys results by digest") {
    auto dir = temp_dir("batch");
    for (const char* f : {"n9.alg", "heisenberg3.alg", "filiform_model_6.alg"})
        std::filesystem::copy_file(corpus(f), dir / f);
    auto r = run({"dld", "--batch", dir.string()});
    auto j = r.report();
    REQUIRE(j.contains("batch"));
    CHECK(j["batch"].size() == 3);
    auto key = digest(read_file(corpus("n9.alg")));
    REQUIRE(j["batch"].contains(key));
    CHECK(j["batch"][key]["exit"] == 1);
    auto again = run({"dld", "--batch", dir.string()});
    CHECK(again.out == r.out);
}

TEST_CASE("construct pipeline reproduces the corpus") {
    auto t = run({"construct", "tensor", corpus("n1.alg"), corpus("n2.json"), "--name", "n1n2"});
    CHECK(t.exit == 0);
    CHECK(t.out == read_file(corpus("n1n2.alg")));
}

TEST_CASE("normalize with an explicit nilradical") {
    auto r = run({"normalize", corpus("r46_n8.alg"), "--nilradical-dim", "8"});
    CHECK(r.exit == 0);
    auto n9 = run({"normalize", corpus("r46_n8.alg")});
    CHECK(n9.exit == 2);
}
