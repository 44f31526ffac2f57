#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = latmw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kViolatesA =
    R"({"kind":"custom","params":{"group":{"orders":[2]},"lattice":{"elements":2,"leq":[[0,1]]}},"sigma":[1,1]})";
const std::string kDivisor12 =
    R"({"kind":"custom","params":{"group":{"orders":[2]},"lattice":{"elements":6,)"
    R"("leq":[[0,1],[0,2],[1,3],[1,4],[2,4],[3,5],[4,5]],"labels":["1","2","3","4","6","12"]}},"sigma":[0,5]})";

}  // namespace

TEST(Cli, KrawtchoukLeeTable) {
    const auto r = cli({"krawtchouk", "--support", "lee4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "i\\j\t0\t1\t2\n0\t1\t2\t1\n1\t1\t0\t-1\n2\t1\t-2\t1\n");
}

TEST(Cli, KrawtchoukRankLabels) {
    const auto r = cli({"krawtchouk", "--support", "lee4", "--labels", "rank"});
    EXPECT_EQ(r.out, "i\\j\t0\t1\t2\n0\t1\t1\t2\n1\t1\t1\t-2\n2\t1\t-1\t0\n");
}

TEST(Cli, KrawtchoukRankSupport) {
    const auto r = cli({"krawtchouk", "--support", "rank", "--q", "2", "--k", "1", "--m", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = latmw::io::parse(r.out);
    EXPECT_EQ(j["table"], latmw::io::parse(R"([["1","1"],["1","-1"]])"));
}

TEST(Cli, KrawtchoukVerify) {
    EXPECT_EQ(cli({"krawtchouk", "--support", "hamming", "--group", "2", "--n", "2", "--verify"}).code, 0);
    EXPECT_EQ(cli({"krawtchouk", "--support", "homogeneous", "--p", "3", "--n", "1", "--verify", "--dual"}).code, 0);
    EXPECT_EQ(cli({"krawtchouk", "--support", "chain", "--group", "8", "--verify"}).code, 0);
}

TEST(Cli, VerifySupport) {
    const auto good = cli({"verify-support", "--support", "homogeneous", "--p", "3", "--n", "1"});
    EXPECT_EQ(good.code, 0);
    EXPECT_NE(good.out.find("gamma\t1\t3\t9"), std::string::npos);
    const auto a = cli({"verify-support", "--support-file", kViolatesA});
    EXPECT_EQ(a.code, 2);
    EXPECT_NE(a.out.find("A\tviolated: sigma(0) = 1 is not the bottom"), std::string::npos);
    const auto irr = cli({"verify-support", "--support-file", kDivisor12, "--format", "json"});
    EXPECT_EQ(irr.code, 3);
    const auto j = latmw::io::parse(irr.out);
    EXPECT_FALSE(j["lattice_regular"].get<bool>());
    EXPECT_FALSE(j["lattice_witness"].get<std::string>().empty());
}

TEST(Cli, Transform) {
    auto r = cli({"transform", "--support", "hamming", "--group", "2", "--n", "2", "--distribution", "1,0,1",
                  "--code-size", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"counts\":[\"1\",\"0\",\"1\"]}\n");
    r = cli({"transform", "--support", "hamming", "--group", "2", "--n", "2", "--distribution", "1,2,1",
             "--code-size", "4"});
    EXPECT_EQ(r.out, "{\"counts\":[\"1\",\"0\",\"0\"]}\n");
    r = cli({"transform", "--support", "rank", "--q", "2", "--k", "2", "--m", "2", "--distribution",
             R"({"counts":["1","9","6"]})", "--code-size", "16"});
    EXPECT_EQ(r.out, "{\"counts\":[\"1\",\"0\",\"0\"]}\n");
    r = cli({"transform", "--support", "rank", "--q", "2", "--k", "2", "--m", "2", "--distribution", "1,0,0",
             "--code-size", "1", "--direction", "inverse"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"counts\":[\"1\",\"9\",\"6\"]}\n");
}

TEST(Cli, TransformRejectsNonIntegerResults) {
    // (1,1) is not the distribution of a subgroup of Z_3; the transform has a half-integer entry.
    const auto r = cli({"transform", "--support", "hamming", "--group", "3", "--n", "1", "--distribution", "1,1",
                        "--code-size", "2"});
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(cli({"transform", "--support", "hamming", "--group", "2", "--n", "1", "--distribution", "1,1",
                   "--code-size", "3"})
                  .code,
              4);
}

TEST(Cli, CountMatrices) {
    const std::vector<std::string> base{"count-matrices", "--q", "2", "--k", "2", "--m", "2"};
    auto with = [&](std::vector<std::string> extra) {
        auto a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return cli(a);
    };
    EXPECT_EQ(with({"--constraint", "zero_diagonal", "--diagonal", "1,2", "--rank", "2"}).out, "{\"count\":\"1\"}\n");
    EXPECT_EQ(with({"--rank", "1"}).out, "{\"count\":\"9\"}\n");
    EXPECT_EQ(with({"--constraint", "zero_block", "--block", "1,1", "--rank", "2", "--format", "tsv"}).out, "2\n");
    EXPECT_EQ(with({"--constraint", "zero_block", "--block", "1,1", "--rank", "2", "--brute-force"}).out,
              "{\"count\":\"2\"}\n");
    EXPECT_EQ(with({"--constraint", "sum_zero", "--indices", "1,1;1,2;2,1;2,2", "--rank", "1"}).out,
              "{\"count\":\"5\"}\n");
    EXPECT_EQ(with({"--constraint", "kernel", "--matrix", "1,0;0,1", "--rank", "2"}).out,
              with({"--constraint", "kernel", "--matrix", "1,0;0,1", "--rank", "2", "--brute-force"}).out);
    EXPECT_EQ(cli({"count-matrices", "--request",
                   R"({"q":2,"k":2,"m":2,"rank":1,"constraint":{"kind":"symmetric"}})"})
                  .out,
              "{\"count\":\"3\"}\n");
}

TEST(Cli, CountMatricesErrors) {
    EXPECT_EQ(cli({"count-matrices", "--q", "2", "--k", "2", "--m", "2"}).code, 1);
    EXPECT_EQ(cli({"count-matrices", "--q", "6", "--k", "1", "--m", "1", "--rank", "1"}).code, 1);
    EXPECT_EQ(cli({"count-matrices", "--q", "2", "--k", "3", "--m", "3", "--rank", "1", "--constraint", "zero_block",
                   "--block", "4,1"})
                  .code,
              1);
    EXPECT_EQ(cli({"count-matrices", "--q", "3", "--k", "5", "--m", "5", "--rank", "1", "--brute-force"}).code, 1);
    EXPECT_EQ(cli({"count-matrices", "--request", R"({"q":2,"k":1,"m":1,"rank":0,"colour":1})"}).code, 1);
}

TEST(Cli, Optimal) {
    auto r = cli({"optimal", "--support", "hamming", "--group", "2", "--n", "2", "--generators", "1,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = latmw::io::parse(r.out);
    EXPECT_TRUE(j["optimal"].get<bool>());
    EXPECT_TRUE(j["dual"]["optimal"].get<bool>());
    EXPECT_EQ(j["distribution"], latmw::io::parse(R"(["1","0","1"])"));
    EXPECT_TRUE(j["solved_matches"].get<bool>());

    r = cli({"optimal", "--support", "lee4", "--generators", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = latmw::io::parse(r.out);
    EXPECT_EQ(j["defect"], "2");
    EXPECT_FALSE(j["optimal"].get<bool>());

    r = cli({"optimal", "--support", "lee4", "--generators", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("zero code"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, 1);
    EXPECT_EQ(cli({"frobnicate"}).code, 1);
    EXPECT_EQ(cli({"krawtchouk", "--support", "hamming", "--group", "2", "--n", "2", "--q", "3"}).code, 1);
    EXPECT_EQ(cli({"krawtchouk", "--support-file", R"({"kind":"lee4","extra":1})"}).code, 1);
    EXPECT_EQ(cli({"krawtchouk", "--support", "rank", "--q", "2", "--k", "3", "--m", "2"}).code, 1);
    EXPECT_EQ(cli({"krawtchouk", "--support", "homogeneous", "--p", "4", "--n", "1"}).code, 1);
    EXPECT_EQ(cli({"krawtchouk", "--support", "lee4", "--format", "xml"}).code, 1);
    EXPECT_EQ(cli({"krawtchouk", "--support-file", "/nonexistent/support.json"}).code, 1);
}

TEST(Cli, SupportFileErrorsMapToExitCodes) {
    EXPECT_EQ(cli({"krawtchouk", "--support-file", kViolatesA}).code, 2);
    EXPECT_EQ(cli({"krawtchouk", "--support-file", kDivisor12}).code, 3);
}

TEST(Cli, OutputIsDeterministic) {
    const std::vector<std::vector<std::string>> requests{
        {"krawtchouk", "--support", "homogeneous", "--p", "3", "--n", "2", "--format", "json"},
        {"verify-support", "--support", "rank", "--q", "2", "--k", "2", "--m", "3", "--format", "json"},
        {"count-matrices", "--q", "3", "--k", "2", "--m", "2", "--rank", "1", "--brute-force"},
        {"optimal", "--support", "rank", "--q", "2", "--k", "2", "--m", "2", "--generators", "1,0,0,1"},
    };
    for (const auto& req : requests) {
        const auto a = cli(req), b = cli(req);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
        EXPECT_FALSE(a.out.empty()) << a.err;
    }
}
