#include "bettikit/cli.hpp"
#include "bettikit/fixtures.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bettikit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body)
{
    auto path = std::filesystem::temp_directory_path() / ("bettikit_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

std::string fixture(const std::string& name)
{
    return (std::filesystem::path(fixtures_dir()) / name).string();
}

}  // namespace

TEST_CASE("pure")
{
    auto r = run({"pure", "0,3,4,5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "0: 1\n2: . 10 15 6\nmultiplicity: 10\n");

    auto j = nlohmann::json::parse(run({"pure", "0,2,4,5", "--out", "json"}).out);
    CHECK(j["multiplicity"] == "20/3");

    CHECK(run({"pure", "0,3,3"}).code == kExitInputError);
    CHECK(run({"pure"}).code == kExitUsage);
}

TEST_CASE("decompose")
{
    auto r = run({"decompose", fixture("veronese_projection.table"), "--codim", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("2/3  (0,3,4)") != std::string::npos);
    CHECK(r.out.find("multiplicity (length 2 part): 4") != std::string::npos);
    CHECK(r.err.empty());
    CHECK(run({"decompose", fixture("veronese_projection.table"), "--codim", "4"}).err.find("warning") != std::string::npos);

    auto j = nlohmann::json::parse(run({"decompose", fixture("cubic_conic.table"), "--codim", "3", "--out", "json"}).out);
    CHECK(j["terms"].size() == 4);
    CHECK(j["multiplicity"] == "5");

    auto off = temp_file("off.table", "0: 1\n1: . . 1\n");
    CHECK(run({"decompose", off}).code == kExitInputError);
    CHECK(run({"decompose", "/nonexistent/file"}).code == kExitInputError);
}

TEST_CASE("betti")
{
    auto r = run({"betti", fixture("twisted_cubic.ideal"), "--qmax", "3", "--cross-check"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("0: 1\n1: . 3 2\n") == 0);
    CHECK(r.err.find("differ") == std::string::npos);

    auto j = nlohmann::json::parse(run({"betti", fixture("twisted_cubic.ideal"), "--qmax", "3", "--field", "rational", "--out", "json"}).out);
    CHECK(j["complete"] == true);

    CHECK(run({"betti", fixture("twisted_cubic.ideal")}).code == kExitUsage);
    auto bad = temp_file("bad.ideal", "vars 2\nx0 + x1^2\n");
    auto e = run({"betti", bad, "--qmax", "2"});
    CHECK(e.code == kExitInputError);
    CHECK(e.err.find("line 2") != std::string::npos);
}

TEST_CASE("check")
{
    auto v = run({"check", fixture("veronese_projection.table"), "--codim", "2", "--assert-nd"});
    CHECK(v.code == kExitViolation);
    auto n = run({"check", fixture("cubic_conic.table"), "--codim", "3", "--next-to-max", "--out", "json"});
    CHECK(n.code == kExitViolation);
    auto j = nlohmann::json::parse(n.out);
    CHECK(j.dump().find("Violation") != std::string::npos);

    auto tc = temp_file("tc.table", "0: 1\n1: . 3 2\n");
    CHECK(run({"check", tc, "--codim", "2"}).code == kExitOk);
    auto ndm = run({"check", tc, "--codim", "2", "--ndm", "1,1"});
    CHECK(ndm.code == kExitOk);
    CHECK(ndm.out.find("N_{1,1}: fails") != std::string::npos);
    CHECK(run({"check", tc}).code == kExitUsage);
}

TEST_CASE("fixtures and dispatch")
{
    auto list = run({"fixtures", "--list"});
    CHECK(list.code == kExitOk);
    CHECK(list.out.find("twisted_cubic") != std::string::npos);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}
