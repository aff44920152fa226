#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qpl/cli.hpp"

using qpl::cli::main_with_args;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = main_with_args(args, out, err);
    return {status, out.str(), err.str()};
}

std::string last_line(const std::string& text)
{
    auto end = text.find_last_not_of('\n');
    auto start = text.rfind('\n', end);
    return text.substr(start + 1, end - start);
}

} // namespace

TEST(Cli, FigurateCsv)
{
    const auto r = run({"figurate", "--k", "3", "--ell", "1", "--bound", "7"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "# schema: 1\nj,value\n0,0\n1,1\n-1,2\n2,5\n-2,7\n");
}

TEST(Cli, PartitionsRecursion)
{
    const auto r = run({"partitions", "--set", "Jbar:3,1", "--mode", "unrestricted", "--n", "10", "--method",
                        "recursion"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(last_line(r.out), "10,42");
}

TEST(Cli, PartitionsCheckCrossRunsMethods)
{
    for (const std::vector<std::string> extra :
         {std::vector<std::string>{"--set", "J:5,2", "--mode", "distinct", "--gamma", "-1"},
          std::vector<std::string>{"--set", "Jbar:7,3", "--mode", "atmost", "--d", "2"},
          std::vector<std::string>{"--set", "set:2,3,7", "--mode", "unrestricted"}}) {
        std::vector<std::string> args{"partitions", "--n", "60", "--method", "gf", "--check"};
        args.insert(args.end(), extra.begin(), extra.end());
        const auto r = run(args);
        EXPECT_EQ(r.status, 0) << r.err;
        EXPECT_NE(r.err.find("oracle agrees"), std::string::npos) << r.err;
    }
}

TEST(Cli, PartitionsJson)
{
    const auto r = run({"partitions", "--set", "mult:1", "--n", "5", "--method", "oracle", "--format", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["values"].back(), "7");
}

TEST(Cli, DivisorsAllMethodsAgree)
{
    for (const std::string method : {"scan", "recursion", "kim"}) {
        const auto r = run({"divisors", "--k", "3", "--ell", "1", "--n", "12", "--method", method, "--check"});
        EXPECT_EQ(r.status, 0) << r.err;
        EXPECT_EQ(last_line(r.out), "12,28");
    }
}

TEST(Cli, VerifySingleIdentity)
{
    const auto r = run({"verify", "--identity", "specialized", "--k", "4", "--ell", "0", "--sign", "-1", "--order",
                        "50"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j[0]["outcome"], "pass");
    EXPECT_EQ(j[0]["schema"], 1);
}

TEST(Cli, VerifyAllIsDeterministicAcrossJobs)
{
    const auto a = run({"verify", "--all", "--grid", "k=3..5", "--order", "60"});
    const auto b = run({"verify", "--all", "--grid", "k=3..5", "--order", "60", "--jobs", "3"});
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, HypothesisViolationIsUsageError)
{
    const auto r = run({"partitions", "--set", "Jbar:4,2", "--n", "10", "--method", "gf"});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("l != k/2"), std::string::npos) << r.err;

    const auto v = run({"verify", "--identity", "pbar-recursion", "--k", "6", "--ell", "3"});
    EXPECT_EQ(v.status, 2);
    EXPECT_NE(v.err.find("boundary"), std::string::npos) << v.err;
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"bogus"}).status, 2);
    EXPECT_EQ(run({"figurate", "--k", "3"}).status, 2);
    EXPECT_EQ(run({"partitions", "--set", "J:5,2", "--n", "5", "--method", "magic"}).status, 2);
    EXPECT_EQ(run({"partitions", "--set", "J:5,2", "--n", "5", "--method", "gf", "--gamma", "3"}).status, 2);
    EXPECT_EQ(run({"verify", "--order", "10"}).status, 2);
    EXPECT_EQ(run({"verify", "--all", "--grid", "3..8"}).status, 2);
    EXPECT_EQ(run({"theta", "--q", "0.5,x", "--z", "1"}).status, 2);
    EXPECT_EQ(run({"theta", "--q", "1.5,0", "--z", "1,0"}).status, 2);
    EXPECT_EQ(run({"partitions", "--set", "mult:1", "--n", "500", "--method", "oracle"}).status, 2);
    EXPECT_EQ(run({"partitions", "--set", "I:4,1", "--n", "5", "--method", "recursion"}).status, 2);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, Theta)
{
    const auto r = run({"theta", "--variant", "a", "--q", "0.1,0", "--z", "1,0", "--check"});
    ASSERT_EQ(r.status, 0) << r.err;
    const auto row = last_line(r.out);
    EXPECT_EQ(row.substr(0, 12), "2.2020020002");

    const auto j = run({"theta", "--variant", "c", "--k", "2", "--ell", "1", "--q", "0.3,0.1", "--z", "0.5,0.5",
                        "--format", "json", "--check"});
    ASSERT_EQ(j.status, 0) << j.err;
    const auto doc = nlohmann::json::parse(j.out);
    EXPECT_LT(doc["residual"]["shift"].get<double>(), 1e-11);

    const auto zero = run({"theta", "--q", "0,0", "--z", "2,0"});
    EXPECT_EQ(zero.status, 0) << zero.err;
    EXPECT_EQ(last_line(zero.out), "3,0,nan,nan");
}

TEST(Cli, OutputFile)
{
    const std::string path = testing::TempDir() + "qpl_cli_out.csv";
    const auto r = run({"figurate", "--k", "5", "--ell", "2", "--bound", "3", "--output", path});
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), "# schema: 1\nj,value\n0,0\n1,2\n-1,3\n");
    std::remove(path.c_str());
}
