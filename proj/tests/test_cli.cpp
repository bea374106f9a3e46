#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct result {
    int code;
    std::string out;
    std::string err;
};

result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "partgen");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = partgen::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("count")
{
    CHECK(invoke({"count", "--n", "12"}).out == "77\n");
    CHECK(invoke({"count", "--n", "8", "--m", "4", "--kind", "ndcf"}).out == "5\n");
    CHECK(invoke({"count", "--n", "6", "--m", "2", "--kind", "nac"}).out == "4\n");
    CHECK(invoke({"count", "--n", "12", "--kind", "ntac"}).out == "35\n");
    CHECK(invoke({"count", "--n", "12", "--kind", "ones"}).out == "195\n");
    CHECK(invoke({"count", "--n", "8", "--kind", "ndcf"}).code == 3);
    CHECK(invoke({"count", "--n", "0"}).code == 3);
    CHECK(invoke({"count", "--n", "5", "--kind", "bogus"}).code == 2);
}

TEST_CASE("gen")
{
    CHECK(invoke({"gen", "--algo", "rule-asc", "--n", "4"}).out == "1+1+1+1\n1+1+2\n1+3\n2+2\n4\n");
    CHECK(invoke({"gen", "--algo", "accel-desc", "--n", "4", "--limit", "2", "--sep", ","}).out == "4\n3,1\n");
    CHECK(invoke({"gen", "--algo", "rec-desc", "--n", "8", "--m", "4"}).out == "4+1+1+1+1\n4+2+1+1\n4+2+2\n4+3+1\n4+4\n");
    CHECK(invoke({"gen", "--algo", "rec-asc", "--n", "5", "--m", "3"}).out == "5\n");
    CHECK(invoke({"gen", "--algo", "rule-asc", "--n", "4", "--m", "2"}).code == 3);
    CHECK(invoke({"gen", "--algo", "warp-drive", "--n", "4"}).code == 2);
    CHECK(invoke({"gen", "--algo", "rule-asc", "--n", "4", "--sep", "::"}).code == 3);
}

TEST_CASE("gen line counts equal count output")
{
    for (int n = 1; n <= 30; ++n) {
        const auto want = invoke({"count", "--n", std::to_string(n)}).out;
        for (auto a : partgen::all_algos) {
            const auto r = invoke({"gen", "--algo", std::string(partgen::name(a)), "--n", std::to_string(n)});
            REQUIRE(r.code == 0);
            REQUIRE(std::to_string(lines(r.out)) + "\n" == want);
        }
    }
}

TEST_CASE("instrument")
{
    CHECK(invoke({"instrument", "--algo", "accel-asc", "--n", "12"}).out == "reads=35,writes=153,invocations=0\n");
    const auto rd = invoke({"instrument", "--algo", "rec-desc", "--n", "12"}).out;
    CHECK(rd.rfind("reads=0,", 0) == 0);
    CHECK(rd.find(",invocations=133\n") != std::string::npos);
    const auto b = invoke({"instrument", "--algo", "accel-asc", "--n", "12", "--branches"});
    CHECK(b.out.find("accel-asc-visit-v=42\n") != std::string::npos);
    const auto t = invoke({"instrument", "--algo", "accel-asc", "--n", "3", "--tape", "-"});
    CHECK(t.out.find("visit,kind,index\n") != std::string::npos);
    const auto inc = invoke({"instrument", "--algo", "rule-asc", "--n", "12", "--include-init"});
    CHECK(inc.out == "reads=154,writes=155,invocations=0\n");
}

TEST_CASE("verify")
{
    const auto ok = invoke({"verify", "--max-n", "12"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    const auto bad = invoke({"verify", "--max-n", "12", "--mutate", "accel-asc:drop-visit"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL differential-equivalence") != std::string::npos);
    CHECK(invoke({"verify", "--max-n", "12", "--mutate", "garbage"}).code == 3);
}

TEST_CASE("bench")
{
    const auto r = invoke({"bench", "--pair", "accel", "--n", "40,45", "--reps", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,predicted,measured\n40,", 0) == 0);
    CHECK(lines(r.out) == 3);
    CHECK(invoke({"bench", "--pair", "sideways", "--n", "40", "--reps", "1"}).code == 2);
    CHECK(invoke({"bench", "--pair", "accel", "--n", "40", "--reps", "0"}).code == 3);
}

TEST_CASE("usage")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"count"}).code == 2);
    const auto h = invoke({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("gen") != std::string::npos);
}
